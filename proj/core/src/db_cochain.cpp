#include "dbcohom/db_cochain.hpp"

namespace dbcohom {

DBOperatorSpec db_operator_spec(int truncation, int diagonal) {
  if (truncation < 0) throw InvalidParameterError("truncation must be >= 0");
  if (diagonal < -1) throw InvalidParameterError("diagonal must be >= -1");
  DBOperatorSpec spec;
  spec.truncation = truncation;
  spec.source_diagonal = diagonal;
  for (int q = db_layer_min(truncation, diagonal); q <= diagonal + 1; ++q) {
    spec.source_layers.push_back(q);
  }
  for (int q = db_layer_min(truncation, diagonal + 1); q <= diagonal + 2; ++q) {
    spec.target_layers.push_back(q);
  }
  OpSymbol d_symbol = (((diagonal % 2) + 2) % 2 == 0) ? OpSymbol::plus_d
                                                      : OpSymbol::minus_d;
  for (int target : spec.target_layers) {
    std::vector<OpSymbol> row;
    for (int source : spec.source_layers) {
      if (source == target - 1) {
        row.push_back(OpSymbol::cech);
      } else if (source == target) {
        row.push_back(d_symbol);
      } else {
        row.push_back(OpSymbol::zero);
      }
    }
    spec.blocks.push_back(std::move(row));
  }
  return spec;
}

}  // namespace dbcohom
