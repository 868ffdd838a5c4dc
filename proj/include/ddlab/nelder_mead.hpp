// Copyright 2026 The ddlab Authors
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

#ifndef DDLAB_NELDER_MEAD_HPP_
#define DDLAB_NELDER_MEAD_HPP_

#include <functional>
#include <vector>

namespace ddlab {

struct NelderMeadOptions {
  double initial_step = 0.5;
  double x_tol = 1e-10;
  double f_tol = 1e-14;
  std::size_t max_iterations = 2000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fval = 0;
  std::size_t iterations = 0;
};

// Standard downhill simplex (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0,
                             const NelderMeadOptions& opts = {});

}  // namespace ddlab

#endif  // DDLAB_NELDER_MEAD_HPP_
