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

// Convenience header pulling in the whole library.

#ifndef NAMECHECK_NAMECHECK_HPP
#define NAMECHECK_NAMECHECK_HPP

#include "namecheck/abstraction.hpp"
#include "namecheck/body_patterns.hpp"
#include "namecheck/comparison.hpp"
#include "namecheck/config.hpp"
#include "namecheck/error.hpp"
#include "namecheck/extraction.hpp"
#include "namecheck/identifier_splitter.hpp"
#include "namecheck/java_parser.hpp"
#include "namecheck/name_patterns.hpp"
#include "namecheck/name_regex.hpp"
#include "namecheck/pos_tagger.hpp"
#include "namecheck/report.hpp"
#include "namecheck/sequence_miner.hpp"
#include "namecheck/source_model.hpp"
#include "namecheck/source_scanner.hpp"
#include "namecheck/version.hpp"

#endif  // NAMECHECK_NAMECHECK_HPP
