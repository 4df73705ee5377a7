/*
   Copyright 2026 The steenrod authors

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

#ifndef STEENROD_STEENROD_HPP
#define STEENROD_STEENROD_HPP

#include "action.hpp"
#include "adem.hpp"
#include "derivation.hpp"
#include "f2.hpp"
#include "f2_matrix.hpp"
#include "module.hpp"
#include "module_io.hpp"
#include "parse.hpp"
#include "poly.hpp"

#endif  // STEENROD_STEENROD_HPP
