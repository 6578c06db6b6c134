// Copyright 2026 The rigidcx Authors
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

#include "rigidcx/gf2k.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <string>

#include "rigidcx/error.h"

namespace rigidcx {
namespace {

int Degree(uint32_t poly) { return 31 - std::countl_zero(poly); }

// Remainder of a modulo b over F_2[t].
uint32_t PolyMod(uint32_t a, uint32_t b) {
  const int db = Degree(b);
  while (a != 0 && Degree(a) >= db) a ^= b << (Degree(a) - db);
  return a;
}

void CheckSameField(const FieldElem& a, const FieldElem& b) {
  if (!(a.spec() == b.spec())) {
    throw Error(ErrorCode::kFieldMismatch,
                "field mismatch: modulus " + std::to_string(a.spec().modulus()) +
                    " vs " + std::to_string(b.spec().modulus()));
  }
}

}  // namespace

bool IsIrreducible(uint32_t modulus) {
  if (modulus < 2) return false;
  const int d = Degree(modulus);
  // Any factorization has a factor of degree <= d/2.
  for (uint32_t f = 2; Degree(f) <= d / 2; ++f) {
    if (PolyMod(modulus, f) == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(uint32_t modulus) : modulus_(modulus), degree_(0) {
  if (modulus < 2 || Degree(modulus) > kMaxDegree) {
    throw Error(ErrorCode::kInvalidArgument,
                "field modulus must have degree in [1, 16]");
  }
  if (!IsIrreducible(modulus)) {
    throw Error(ErrorCode::kInvalidArgument,
                "field modulus " + std::to_string(modulus) +
                    " is reducible over F_2");
  }
  degree_ = Degree(modulus);
}

uint32_t FieldSpec::InvBits(uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::kZeroDivisor, "inverse of zero");
  for (uint32_t x = 1; x < size(); ++x) {
    if (MulBits(a, x) == 1) return x;
  }
  // Unreachable for an irreducible modulus.
  throw Error(ErrorCode::kZeroDivisor, "element has no inverse");
}

FieldElem::FieldElem(FieldSpec spec, uint32_t bits) : spec_(spec), bits_(bits) {
  if (bits >= spec.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "element mask " + std::to_string(bits) + " exceeds field size");
  }
}

FieldElem FieldElem::Generator(FieldSpec spec) {
  return FieldElem(spec, PolyMod(0b10, spec.modulus()));
}

FieldElem Add(const FieldElem& a, const FieldElem& b) {
  CheckSameField(a, b);
  return FieldElem(a.spec(), a.bits() ^ b.bits());
}

FieldElem Mul(const FieldElem& a, const FieldElem& b) {
  CheckSameField(a, b);
  return FieldElem(a.spec(), a.spec().MulBits(a.bits(), b.bits()));
}

FieldElem Inv(const FieldElem& a) {
  return FieldElem(a.spec(), a.spec().InvBits(a.bits()));
}

FieldElem Pow(const FieldElem& a, uint64_t exponent) {
  FieldElem result = FieldElem::One(a.spec());
  FieldElem base = a;
  while (exponent != 0) {
    if (exponent & 1) result = Mul(result, base);
    base = Mul(base, base);
    exponent >>= 1;
  }
  return result;
}

std::string ToString(const FieldElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.spec().degree() - 1; i >= 0; --i) {
    if (!((a.bits() >> i) & 1)) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 't';
    } else {
      out += "t^" + std::to_string(i);
    }
  }
  return out;
}

FieldElem ParseElem(const FieldSpec& spec, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::kParse, "cannot parse field element '" +
                                        std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty");
  if (s == "0") return FieldElem::Zero(spec);

  uint32_t bits = 0;
  size_t pos = 0;
  while (true) {
    const size_t end = std::min(s.find('+', pos), s.size());
    const std::string_view term(s.data() + pos, end - pos);
    int exponent = -1;
    if (term == "1") {
      exponent = 0;
    } else if (term == "t" || term == "x") {
      exponent = 1;
    } else if (term.size() > 2 && (term[0] == 't' || term[0] == 'x') &&
               term[1] == '^') {
      const char* first = term.data() + 2;
      const char* last = term.data() + term.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc() || ptr != last) throw fail("bad exponent");
    } else {
      throw fail("bad term '" + std::string(term) + "'");
    }
    if (exponent < 0 || exponent >= spec.degree()) {
      throw fail("degree out of range");
    }
    bits ^= uint32_t{1} << exponent;
    if (end == s.size()) break;
    pos = end + 1;
  }
  return FieldElem(spec, bits);
}

}  // namespace rigidcx
