#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kcomm/endomod.hpp"
#include "kcomm/text.hpp"

namespace kcomm::cli {

/// A parsed input file.
///
///   # comment
///   field Q            | field F <p>
///   vars <n>
///   dim <d>
///   <n matrix literals, each may span several lines>
///   span <matrix>      optional; its rows generate a submodule
///   tilde <expr>       optional, repeatable; a rational function in t
///
/// The vars/dim/matrix block may be omitted for the tilde commands.
struct JobDescription {
  Field field = Field::rationals();
  std::optional<CommutingTuple> tuple;
  std::vector<Vector> span;
  bool has_span = false;
  std::vector<std::pair<UniPoly, UniPoly>> tildes;
};

/// Raised for anything wrong with the input file; `where` points at the
/// offending text. Commutation failures are reported with matrix indices.
JobDescription parse_job(std::string_view text);

}  // namespace kcomm::cli
