/*
 * Copyright (c) tzeta contributors.
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

#ifndef TZETA_CORE_ERROR_HPP
#define TZETA_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tzeta {

enum class errc {
  invalid_argument = 1,
  alpha_near_one,
  invalid_k,
  rank_out_of_range,
  invalid_probability,
  empty_grid,
};

/// The one exception type thrown by the core; the C API maps errc codes
/// onto tz_status values at the boundary.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace tzeta

#endif  // TZETA_CORE_ERROR_HPP
