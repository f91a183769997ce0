#pragma once

#include "heckekit/root_datum.hpp"

namespace heckekit {

struct RootDatum::Memo {
  std::mutex mutex;
  std::unordered_map<Weight, WeightMultiset, WeightHash> dominant;
  // Keyed by (number of roots used, root coordinates).
  std::vector<std::unordered_map<Weight, LaurentPoly, WeightHash>> kostant;
};

}  // namespace heckekit
