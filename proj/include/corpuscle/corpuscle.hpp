/*
 * Copyright 2026+ The corpuscle authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CORPUSCLE_CORPUSCLE_HPP
#define CORPUSCLE_CORPUSCLE_HPP

#include "corpuscle/errors.hpp"
#include "corpuscle/index.hpp"
#include "corpuscle/lexicon.hpp"
#include "corpuscle/normalize.hpp"
#include "corpuscle/porter.hpp"
#include "corpuscle/report.hpp"
#include "corpuscle/run_config.hpp"
#include "corpuscle/stats.hpp"
#include "corpuscle/store.hpp"
#include "corpuscle/term_vector.hpp"
#include "corpuscle/validate.hpp"

#endif  // CORPUSCLE_CORPUSCLE_HPP
