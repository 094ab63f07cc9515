// Copyright 2026 The Sentest Authors
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

#include "sentest/determinism.h"

#include "sentest/errors.h"

namespace sentest {

std::uint64_t RngStream::Bounded(std::uint64_t n) {
  if (n == 0) throw InvalidArgumentError("bounded: n must be >= 1");
  return Next() % n;
}

std::pair<std::uint64_t, RngStream> Bounded(RngStream stream,
                                            std::uint64_t n) {
  std::uint64_t value = stream.Bounded(n);
  return {value, stream};
}

}  // namespace sentest
