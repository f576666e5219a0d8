/*
hypspec

Copyright 2026 The hypspec Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <iosfwd>

namespace hypspec::cli
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInadmissibleEpsilon = 3;
inline constexpr int kExitVerifyFailed = 4;

/// Full command-line entry point; never throws.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypspec::cli
