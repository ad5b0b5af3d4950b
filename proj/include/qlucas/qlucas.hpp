/*
   Copyright 2026 The qlucas Authors

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

// Umbrella header. report.hpp (JSON) is not included; it needs nlohmann/json.
#ifndef QLUCAS_QLUCAS_HPP
#define QLUCAS_QLUCAS_HPP

#include "bounds.hpp"
#include "croots.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "glverify.hpp"
#include "hull2d.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "qpoly.hpp"
#include "qroots.hpp"
#include "quat.hpp"
#include "snail.hpp"

#endif
