// Copyright 2026 The namecheck Authors.
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


#ifndef NAMECHECK_VERSION_HPP
#define NAMECHECK_VERSION_HPP

#include <string_view>

namespace namecheck {

inline constexpr std::string_view kToolVersion = "0.1.0";
/// Version of the body/name pattern catalog and their extraction rules.
inline constexpr std::string_view kCatalogVersion = "1";
/// Version of the machine-readable report schema (docs/records-schema.md).
inline constexpr std::string_view kReportSchemaVersion = "1";

}  // namespace namecheck

#endif  // NAMECHECK_VERSION_HPP
