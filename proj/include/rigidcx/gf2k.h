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

// Binary finite fields F_2[t]/(m(t)).
//
// Elements are bit-packed polynomials: the coefficient of t^i lives at bit i.
// GF(16) uses m(t) = t^4 + t + 1, i.e. modulus mask 0b10011.

#ifndef RIGIDCX_GF2K_H_
#define RIGIDCX_GF2K_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace rigidcx {

// True iff the polynomial with coefficient mask `modulus` (degree >= 1) has
// no nontrivial factor over F_2. Trial division by every lower-degree
// polynomial.
bool IsIrreducible(uint32_t modulus);

class FieldSpec {
 public:
  static constexpr int kMaxDegree = 16;

  // Throws kInvalidArgument unless `modulus` has degree in [1, kMaxDegree]
  // and is irreducible.
  explicit FieldSpec(uint32_t modulus);

  static FieldSpec Gf2() { return FieldSpec(0b11); }
  static FieldSpec Gf16() { return FieldSpec(0b10011); }

  uint32_t modulus() const { return modulus_; }
  int degree() const { return degree_; }
  uint32_t size() const { return uint32_t{1} << degree_; }

  // Raw arithmetic on reduced masks; callers guarantee inputs < size().
  uint32_t MulBits(uint32_t a, uint32_t b) const {
    uint32_t r = 0;
    const uint32_t top = uint32_t{1} << degree_;
    while (b != 0) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & top) a ^= modulus_;
    }
    return r;
  }
  uint32_t InvBits(uint32_t a) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  uint32_t modulus_;
  int degree_;
};

class FieldElem {
 public:
  // Throws kInvalidArgument if bits >= spec.size().
  FieldElem(FieldSpec spec, uint32_t bits);

  static FieldElem Zero(FieldSpec spec) { return FieldElem(spec, 0); }
  static FieldElem One(FieldSpec spec) { return FieldElem(spec, 1); }
  // The class of t; equals 1 in GF(2).
  static FieldElem Generator(FieldSpec spec);

  uint32_t bits() const { return bits_; }
  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const { return bits_ == 0; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.spec_ == b.spec_ && a.bits_ == b.bits_;
  }

 private:
  FieldSpec spec_;
  uint32_t bits_;
};

// All binary operations throw kFieldMismatch when specs differ.
FieldElem Add(const FieldElem& a, const FieldElem& b);
FieldElem Mul(const FieldElem& a, const FieldElem& b);
// Exhaustive search over the nonzero elements. Throws kZeroDivisor on 0.
FieldElem Inv(const FieldElem& a);
FieldElem Pow(const FieldElem& a, uint64_t exponent);

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  return Add(a, b);
}
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  return Mul(a, b);
}

// Polynomial text, highest degree first: "t^3+t+1", "t", "1", "0".
std::string ToString(const FieldElem& a);

// Accepts terms "1", "t", "t^k" joined by '+', in any order, whitespace
// ignored. "x" is read as "t". Repeated terms cancel (characteristic 2).
// Throws kParse on malformed input or a degree outside the field.
FieldElem ParseElem(const FieldSpec& spec, std::string_view text);

}  // namespace rigidcx

#endif  // RIGIDCX_GF2K_H_
