// Copyright 2026 The submax Authors.
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

#ifndef SUBMAX_ROUNDING_H_
#define SUBMAX_ROUNDING_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "submax/matroid.h"
#include "submax/random.h"
#include "submax/submodular.h"

namespace submax {

struct WeightedBasis {
  double alpha = 0.0;
  std::vector<ElementId> basis;
};

// Convex combination of bases of a contracted matroid and the point it
// describes.
struct FractionalSolution {
  std::vector<WeightedBasis> bases;
  FractionalPoint x;
};

// Finds exchange pairs for one merge of two bases. Begin() is called once
// per merge; afterwards every Find(i) is followed by Apply(i, j, ...).
class ExchangeFinder {
 public:
  virtual ~ExchangeFinder() = default;
  virtual void Begin(std::span<const ElementId> b1,
                     std::span<const ElementId> b2) = 0;
  // j in B2 \ B1 with B1 - i + j and B2 - j + i both bases.
  virtual ElementId Find(ElementId i) = 0;
  // into_b1: B1 <- B1 - i + j, otherwise B2 <- B2 - j + i.
  virtual void Apply(ElementId i, ElementId j, bool into_b1) = 0;
};

// Laminar: two top trees. Transversal: alternating walks over the two
// certifying matchings. Graphic: path walk in B2 against the components of
// B1 - i.
std::unique_ptr<ExchangeFinder> NewExchangeFinder(const ContractedMatroid& m);
// Tries every candidate with full basis checks.
std::unique_ptr<ExchangeFinder> NewBruteExchangeFinder(
    const ContractedMatroid& m);

struct RoundingOptions {
  // Re-checks both exchanged sets with the matroid's independence test.
  bool verify = false;
  bool brute_exchange = false;
};

ElementId FindExchange(ElementId i, std::span<const ElementId> b1,
                       std::span<const ElementId> b2,
                       const ContractedMatroid& m);

std::vector<ElementId> MergeBases(double alpha1, std::vector<ElementId> b1,
                                  double alpha2, std::vector<ElementId> b2,
                                  const ContractedMatroid& m, Rng& rng,
                                  const RoundingOptions& options = {},
                                  uint64_t* exchanges = nullptr);

// Left fold of MergeBases over the bases. The result is a basis of m.
std::vector<ElementId> SwapRound(const FractionalSolution& solution,
                                 const ContractedMatroid& m, Rng& rng,
                                 const RoundingOptions& options = {},
                                 uint64_t* exchanges = nullptr);

}  // namespace submax

#endif  // SUBMAX_ROUNDING_H_
