// Copyright 2026 The pingpong-eve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PINGPONG_VERIFY_H
#define PINGPONG_VERIFY_H

#include <string>
#include <vector>

namespace pingpong {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

/// Every exact state, distribution, information and bound check. The printed
/// Bob-Eve closed forms are known to disagree with the brute-force values;
/// their checks pass when that disagreement is detected.
std::vector<CheckResult> run_verification_checks();

}  // namespace pingpong

#endif
