#pragma once

#include <string>

#include "qcrys/crystal_json.hpp"
#include "qcrys/linop.hpp"

namespace qcrys {

/// {"m": "c", ...} keyed by radicand; the zero value is {}.
Json radical_to_json(const Radical& r);

/// [{"from", "to", "coeff"}, ...] ordered by (from, to).
Json entries_to_json(const LinOp& op);

/// "from,to,coeff" lines, optionally prefixed by a label column; the
/// coefficient is the quoted "c*sqrt(m)" rendering.
std::string entries_to_csv(const LinOp& op, const std::string& label_column = "");

}  // namespace qcrys
