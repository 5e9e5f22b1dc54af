// Copyright 2026 The bmgamma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BMGAMMA_HPP
#define BMGAMMA_HPP

#include "bmgamma/bernoulli.hpp"
#include "bmgamma/bessel.hpp"
#include "bmgamma/coefficients.hpp"
#include "bmgamma/error_model.hpp"
#include "bmgamma/errors.hpp"
#include "bmgamma/gamma.hpp"
#include "bmgamma/power_series.hpp"
#include "bmgamma/rational.hpp"
#include "bmgamma/real.hpp"
#include "bmgamma/reference.hpp"

#endif  // BMGAMMA_HPP
