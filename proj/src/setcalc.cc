// Copyright 2026 The GCSB Authors
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

#include "gcsb/setcalc.h"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <utility>

#include "gcsb/errors.h"

namespace gcsb {

GroundSet::GroundSet(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {}

GroundRef GroundSet::Create(int size) {
  if (size < 1 || size > kMaxSize) {
    throw DomainError("ground set size " + std::to_string(size) +
                      " outside [1, 64]");
  }
  return GroundRef(new GroundSet(size, {}));
}

GroundRef GroundSet::Create(std::vector<std::string> labels) {
  const int size = static_cast<int>(labels.size());
  if (size < 1 || size > kMaxSize) {
    throw DomainError("ground set size " + std::to_string(size) +
                      " outside [1, 64]");
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != size) {
    throw DomainError("ground set labels are not unique");
  }
  return GroundRef(new GroundSet(size, std::move(labels)));
}

std::string GroundSet::Label(int i) const {
  return has_labels() ? labels_.at(i) : std::to_string(i);
}

std::optional<int> GroundSet::IndexOf(std::string_view label) const {
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

ElementSet::ElementSet(GroundRef ground, std::uint64_t mask)
    : ground_(std::move(ground)), mask_(mask) {
  if (!ground_) throw DomainError("element set without ground set");
  if ((mask_ & ~ground_->full_mask()) != 0) {
    throw DomainError("element set has members outside its ground set");
  }
}

ElementSet ElementSet::Full(GroundRef ground) {
  const std::uint64_t mask = ground->full_mask();
  return ElementSet(std::move(ground), mask);
}

ElementSet ElementSet::Of(GroundRef ground, std::initializer_list<int> members) {
  return Of(std::move(ground),
            std::span<const int>(members.begin(), members.size()));
}

ElementSet ElementSet::Of(GroundRef ground, std::span<const int> members) {
  std::uint64_t mask = 0;
  for (int m : members) {
    if (m < 0 || m >= ground->size()) {
      throw DomainError("element " + std::to_string(m) +
                        " outside ground set of size " +
                        std::to_string(ground->size()));
    }
    mask |= std::uint64_t{1} << m;
  }
  return ElementSet(std::move(ground), mask);
}

bool ElementSet::contains(int element) const {
  return element >= 0 && element < 64 && ((mask_ >> element) & 1U) != 0;
}

int ElementSet::size() const { return std::popcount(mask_); }

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

void ElementSet::CheckSameGround(const ElementSet& other) const {
  if (ground_ != other.ground_) {
    throw GroundMismatchError("element sets over different ground sets");
  }
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  CheckSameGround(other);
  return (mask_ & ~other.mask_) == 0;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  CheckSameGround(other);
  return ElementSet(ground_, mask_ | other.mask_);
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  CheckSameGround(other);
  return ElementSet(ground_, mask_ & other.mask_);
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  CheckSameGround(other);
  return ElementSet(ground_, mask_ & ~other.mask_);
}

bool ElementSet::operator==(const ElementSet& other) const {
  return ground_ == other.ground_ && mask_ == other.mask_;
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int m : members()) {
    if (!first) out += ",";
    out += ground_->Label(m);
    first = false;
  }
  return out + "}";
}

IndexSet IndexSet::Of(std::initializer_list<int> one_based) {
  return Of(std::span<const int>(one_based.begin(), one_based.size()));
}

IndexSet IndexSet::Of(std::span<const int> one_based) {
  std::uint32_t mask = 0;
  for (int k : one_based) {
    if (k < 1 || k > kMaxIndex) {
      throw DomainError("family index " + std::to_string(k) +
                        " outside [1, 16]");
    }
    mask |= std::uint32_t{1} << (k - 1);
  }
  return IndexSet(mask);
}

IndexSet IndexSet::FromMask(std::uint32_t mask) {
  if ((mask >> kMaxIndex) != 0) {
    throw DomainError("index mask has bits above 16");
  }
  return IndexSet(mask);
}

IndexSet IndexSet::Range(int n) {
  if (n < 0 || n > kMaxIndex) {
    throw DomainError("index range [" + std::to_string(n) + "] too large");
  }
  return IndexSet(n == 0 ? 0 : (std::uint32_t{1} << n) - 1);
}

int IndexSet::size() const { return std::popcount(mask_); }

bool IndexSet::contains(int one_based) const {
  return one_based >= 1 && one_based <= kMaxIndex &&
         ((mask_ >> (one_based - 1)) & 1U) != 0;
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

int IndexSet::max() const {
  return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_);
}

std::string IndexSet::ToString() const {
  std::string out = "{";
  bool first = true;
  for (int k : members()) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

SubsetFamily::SubsetFamily(GroundRef ground, std::vector<ElementSet> sets)
    : ground_(std::move(ground)) {
  if (sets.empty() || static_cast<int>(sets.size()) > kMaxSets) {
    throw DomainError("family size " + std::to_string(sets.size()) +
                      " outside [1, 16]");
  }
  masks_.reserve(sets.size());
  for (const ElementSet& s : sets) {
    if (s.ground() != ground_) {
      throw GroundMismatchError("family member over a different ground set");
    }
    masks_.push_back(s.mask());
  }
}

SubsetFamily::SubsetFamily(GroundRef ground,
                           std::span<const std::uint64_t> masks)
    : ground_(std::move(ground)), masks_(masks.begin(), masks.end()) {
  if (masks_.empty() || static_cast<int>(masks_.size()) > kMaxSets) {
    throw DomainError("family size " + std::to_string(masks_.size()) +
                      " outside [1, 16]");
  }
  for (std::uint64_t m : masks_) {
    if ((m & ~ground_->full_mask()) != 0) {
      throw DomainError("family member outside its ground set");
    }
  }
}

ElementSet SubsetFamily::set(int k) const {
  if (k < 1 || k > size()) {
    throw DomainError("family index " + std::to_string(k) + " outside [1, " +
                      std::to_string(size()) + "]");
  }
  return ElementSet(ground_, masks_[k - 1]);
}

std::uint64_t LevelMask(std::span<const std::uint64_t> sets,
                        std::uint32_t u_mask, int r) {
  int positions[IndexSet::kMaxIndex];
  int n = 0;
  for (std::uint32_t m = u_mask; m != 0; m &= m - 1) {
    positions[n++] = std::countr_zero(m);
  }
  // Walk the r-element subsets of the n positions in colexicographic order
  // (Gosper's hack on an n-bit word).
  std::uint64_t result = 0;
  std::uint32_t combo = (std::uint32_t{1} << r) - 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  while (combo < limit) {
    std::uint64_t meet = ~std::uint64_t{0};
    for (std::uint32_t c = combo; c != 0; c &= c - 1) {
      meet &= sets[positions[std::countr_zero(c)]];
    }
    result |= meet;
    const std::uint32_t low = combo & -combo;
    const std::uint32_t ripple = combo + low;
    combo = (((ripple ^ combo) >> 2) / low) | ripple;
  }
  return result;
}

namespace {

void CheckLevelArgs(const SubsetFamily& family, IndexSet u, int r) {
  if (u.empty()) throw DomainError("level operator needs a nonempty U");
  if (u.max() > family.size()) {
    throw DomainError("U = " + u.ToString() + " exceeds family size " +
                      std::to_string(family.size()));
  }
  if (r < 1 || r > u.size()) {
    throw DomainError("level r = " + std::to_string(r) + " outside [1, " +
                      std::to_string(u.size()) + "]");
  }
}

void CheckAugmentArgs(const SubsetFamily& family, int r_prime, int j) {
  if (!(0 < r_prime && r_prime < j && j <= family.size())) {
    throw DomainError("need 0 < r' < J <= K, got r' = " +
                      std::to_string(r_prime) + ", J = " + std::to_string(j) +
                      ", K = " + std::to_string(family.size()));
  }
}

std::vector<std::uint64_t> AugmentedMasks(std::span<const std::uint64_t> s,
                                          int r_prime, int j) {
  std::vector<std::uint64_t> g(s.begin(), s.begin() + j);
  for (int r = r_prime + 1; r <= j; ++r) {
    g[r - 1] |= LevelMask(s, (std::uint32_t{1} << r) - 1, r_prime + 1);
  }
  return g;
}

}  // namespace

ElementSet IntersectLevel(const SubsetFamily& family, IndexSet u, int r) {
  CheckLevelArgs(family, u, r);
  return ElementSet(family.ground(), LevelMask(family.masks(), u.mask(), r));
}

SubsetFamily AugmentedFamily(const SubsetFamily& family, int r_prime, int j) {
  CheckAugmentArgs(family, r_prime, j);
  return SubsetFamily(family.ground(),
                      AugmentedMasks(family.masks(), r_prime, j));
}

bool AugmentedLevelIdentityHolds(std::span<const std::uint64_t> s,
                                 int r_prime, int j) {
  std::array<std::uint64_t, SubsetFamily::kMaxSets> g;
  for (int r = 1; r <= j; ++r) {
    g[r - 1] = s[r - 1];
    if (r > r_prime) {
      g[r - 1] |= LevelMask(s, (std::uint32_t{1} << r) - 1, r_prime + 1);
    }
  }
  const std::span<const std::uint64_t> gs(g.data(), j);
  const std::uint32_t all = (std::uint32_t{1} << j) - 1;
  for (int r = 1; r <= j; ++r) {
    const std::uint64_t lhs = LevelMask(gs, all, r);
    const std::uint64_t rhs =
        r <= r_prime
            ? LevelMask(s, all, r)
            : LevelMask(s, (std::uint32_t{1} << (j - r + r_prime + 1)) - 1,
                        r_prime + 1);
    if (lhs != rhs) return false;
  }
  return true;
}

bool AugmentedLevelIdentityHolds(const SubsetFamily& family, int r_prime,
                                 int j) {
  CheckAugmentArgs(family, r_prime, j);
  return AugmentedLevelIdentityHolds(family.masks(), r_prime, j);
}

}  // namespace gcsb
