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

#ifndef GCSB_SETCALC_H_
#define GCSB_SETCALC_H_

// Subsets of a small finite ground set and the level operator
//
//   level(U, r) = union over r-element U' of U of the intersection of S_k, k in U'
//
// over an indexed family S_1..S_K. Level 1 is the plain union, level |U| the
// plain intersection, and levels shrink as r grows.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gcsb {

class GroundSet;
using GroundRef = std::shared_ptr<const GroundSet>;

// A finite ground set of at most 64 elements, optionally labelled.
// Elements are the integers 0..size-1. Compared by identity, not value.
class GroundSet {
 public:
  static constexpr int kMaxSize = 64;

  static GroundRef Create(int size);
  static GroundRef Create(std::vector<std::string> labels);

  int size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label of element i, or its decimal index when unlabelled.
  std::string Label(int i) const;
  std::optional<int> IndexOf(std::string_view label) const;
  std::uint64_t full_mask() const {
    return size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
  }

 private:
  GroundSet(int size, std::vector<std::string> labels);

  int size_;
  std::vector<std::string> labels_;
};

// A subset of a GroundSet, stored as one machine word.
class ElementSet {
 public:
  ElementSet(GroundRef ground, std::uint64_t mask);

  static ElementSet Empty(GroundRef ground) {
    return ElementSet(std::move(ground), 0);
  }
  static ElementSet Full(GroundRef ground);
  static ElementSet Of(GroundRef ground, std::initializer_list<int> members);
  static ElementSet Of(GroundRef ground, std::span<const int> members);

  const GroundRef& ground() const { return ground_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int element) const;
  int size() const;
  bool empty() const { return mask_ == 0; }
  std::vector<int> members() const;
  bool IsSubsetOf(const ElementSet& other) const;

  ElementSet operator|(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator-(const ElementSet& other) const;
  bool operator==(const ElementSet& other) const;

  // "{a,b,c}" using ground labels.
  std::string ToString() const;

 private:
  void CheckSameGround(const ElementSet& other) const;

  GroundRef ground_;
  std::uint64_t mask_;
};

// A subset of the family index range [K]. Public constructors take 1-based
// indices; bit k-1 of mask() represents index k.
class IndexSet {
 public:
  static constexpr int kMaxIndex = 16;

  IndexSet() = default;
  static IndexSet Of(std::initializer_list<int> one_based);
  static IndexSet Of(std::span<const int> one_based);
  static IndexSet FromMask(std::uint32_t mask);
  // [n] = {1,..,n}.
  static IndexSet Range(int n);

  std::uint32_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int one_based) const;
  // Ascending 1-based members.
  std::vector<int> members() const;
  int max() const;
  bool IsSubsetOf(IndexSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  bool operator==(const IndexSet& other) const = default;
  auto operator<=>(const IndexSet& other) const = default;

  std::string ToString() const;

 private:
  explicit IndexSet(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

// An ordered family S_1..S_K of subsets of one ground set, 1 <= K <= 16.
class SubsetFamily {
 public:
  static constexpr int kMaxSets = IndexSet::kMaxIndex;

  SubsetFamily(GroundRef ground, std::vector<ElementSet> sets);
  SubsetFamily(GroundRef ground, std::span<const std::uint64_t> masks);

  const GroundRef& ground() const { return ground_; }
  int size() const { return static_cast<int>(masks_.size()); }
  // S_k for 1-based k.
  ElementSet set(int k) const;
  std::span<const std::uint64_t> masks() const { return masks_; }

 private:
  GroundRef ground_;
  std::vector<std::uint64_t> masks_;
};

// Word-level level operator. `sets[i]` is S_{i+1}; `u_mask` selects U.
// Requires 1 <= r <= |U| (unchecked).
std::uint64_t LevelMask(std::span<const std::uint64_t> sets,
                        std::uint32_t u_mask, int r);

// Union over r-subsets U' of U of the intersection of S_k, k in U'.
// Throws DomainError for empty U, U outside [K], or r outside [1, |U|].
ElementSet IntersectLevel(const SubsetFamily& family, IndexSet u, int r);

// The family G_1..G_J with G_r = S_r for r <= r' and
// G_r = S_r | level([r], r'+1) for r > r'.
// Throws DomainError unless 0 < r' < J <= K.
SubsetFamily AugmentedFamily(const SubsetFamily& family, int r_prime, int j);

// Evaluates both sides of the level identity for the augmented family:
//   G-level([J], r) == level([J], r)                for r <= r'
//   G-level([J], r) == level([J-r+r'+1], r'+1)     for r >  r'
// Each side is computed independently through the level operator.
bool AugmentedLevelIdentityHolds(const SubsetFamily& family, int r_prime,
                                 int j);

// Word-level form of the above; requires 0 < r' < J <= sets.size()
// (unchecked). Allocation-free, for exhaustive sweeps.
bool AugmentedLevelIdentityHolds(std::span<const std::uint64_t> sets,
                                 int r_prime, int j);

}  // namespace gcsb

#endif  // GCSB_SETCALC_H_
