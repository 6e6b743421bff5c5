/*
 *   Copyright 2026 The rml-rough Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RML_RML_HPP
#define RML_RML_HPP

#include "element_set.hpp"
#include "errors.hpp"
#include "poset.hpp"
#include "report.hpp"
#include "structure.hpp"
#include "properties.hpp"
#include "enumerate.hpp"
#include "fuzzy.hpp"
#include "rough.hpp"
#include "format.hpp"

#endif  // RML_RML_HPP
