# Copyright 2026 The mildblur Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Blind removal of mild Gaussian blur.

Images are float arrays in [0, 1], shaped HxW or HxWx3.
"""

from ._mildblur import (
    DegenerateInputError,
    IoError,
    dead_leaves,
    deblur,
    estimate_blur,
    psnr,
    solve_general,
    solve_p3,
    ssim,
    synthesize_blurry,
)

__all__ = [
    "DegenerateInputError",
    "IoError",
    "dead_leaves",
    "deblur",
    "estimate_blur",
    "psnr",
    "solve_general",
    "solve_p3",
    "ssim",
    "synthesize_blurry",
]
