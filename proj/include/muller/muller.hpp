/*
 * Copyright 2026 The muller authors
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

#pragma once

#include "acceptance.hpp"
#include "automaton.hpp"
#include "colour_set.hpp"
#include "error.hpp"
#include "games.hpp"
#include "graph.hpp"
#include "graph_reduction.hpp"
#include "io.hpp"
#include "parity_game.hpp"
#include "rabin.hpp"
#include "reduction.hpp"
#include "zielonka.hpp"
