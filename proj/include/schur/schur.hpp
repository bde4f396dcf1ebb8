// Copyright 2026 The schur-choice Authors
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

#ifndef SCHUR_SCHUR_HPP
#define SCHUR_SCHUR_HPP

#include "schur/audit.hpp"
#include "schur/caps.hpp"
#include "schur/choice.hpp"
#include "schur/cli.hpp"
#include "schur/diversity.hpp"
#include "schur/error.hpp"
#include "schur/frontier.hpp"
#include "schur/index_value.hpp"
#include "schur/io.hpp"
#include "schur/majorization.hpp"
#include "schur/rational.hpp"
#include "schur/rule_table.hpp"
#include "schur/students.hpp"
#include "schur/types.hpp"

#endif  // SCHUR_SCHUR_HPP
