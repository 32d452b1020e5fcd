// Copyright 2026 The infgon Authors
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

#include "infgon/laurent_q.hpp"

#include <sstream>

#include "infgon/poly.hpp"

namespace infgon {

LaurentHalfQ LaurentHalfQ::half_power(int h, std::int64_t c) {
  LaurentHalfQ r;
  if (c != 0) r.terms_[h] = c;
  return r;
}

LaurentHalfQ& LaurentHalfQ::operator+=(const LaurentHalfQ& o) {
  for (const auto& [h, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(h, c);
    if (!inserted) {
      it->second = checked::add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentHalfQ& LaurentHalfQ::operator-=(const LaurentHalfQ& o) { return *this += -o; }

LaurentHalfQ operator-(const LaurentHalfQ& a) {
  LaurentHalfQ r;
  for (const auto& [h, c] : a.terms_) r.terms_[h] = checked::sub(0, c);
  return r;
}

LaurentHalfQ operator*(const LaurentHalfQ& a, const LaurentHalfQ& b) {
  LaurentHalfQ r;
  for (const auto& [ha, ca] : a.terms_) {
    for (const auto& [hb, cb] : b.terms_) {
      r += LaurentHalfQ::half_power(ha + hb, checked::mul(ca, cb));
    }
  }
  return r;
}

LaurentHalfQ LaurentHalfQ::shifted(int h) const {
  LaurentHalfQ r;
  for (const auto& [k, c] : terms_) r.terms_[k + h] = c;
  return r;
}

std::int64_t LaurentHalfQ::at_one() const {
  std::int64_t s = 0;
  for (const auto& [h, c] : terms_) s = checked::add(s, c);
  return s;
}

namespace {

std::string power_text(int h) {
  if (h == 0) return "";
  if (h == 2) return "q";
  std::string e = h % 2 == 0 ? std::to_string(h / 2) : std::to_string(h) + "/2";
  return "q^{" + e + "}";
}

}  // namespace

std::string LaurentHalfQ::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    std::int64_t k = c;
    if (!first) {
      os << (k < 0 ? " - " : " + ");
      if (k < 0) k = -k;
    } else if (k == -1 && h != 0) {
      os << "-";
      k = 1;
    }
    first = false;
    if (k != 1 || h == 0) os << k;
    os << power_text(h);
  }
  return os.str();
}

}  // namespace infgon
