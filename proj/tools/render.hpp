#pragma once

// Text, CSV, JSON, DOT and LaTeX renderers for the CLI.

#include <optional>
#include <string>

#include "hilbzeta/motivic.hpp"
#include "hilbzeta/oracle.hpp"
#include "hilbzeta/strata.hpp"
#include "hilbzeta/tree.hpp"

namespace hz::render {

enum class Format { Text, Json, Csv, Dot, Latex };

std::optional<Format> parse_format(const std::string& s);
std::string format_name(Format f);

// Throws Error(InvalidArgument) when the format does not apply.
std::string zeta(const NumericalSemigroup& S, const ZetaSeries& z, Format f);
std::string tree(const SemimoduleTree& t, Format f);
std::string genzeta(const NumericalSemigroup& S, const GenSeries& g, const std::optional<Laurent2>& homfly,
                    Format f);
std::string report(const VerifyReport& r, Format f);

}  // namespace hz::render
