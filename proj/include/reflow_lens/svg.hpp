#pragma once

#include <iosfwd>
#include <vector>

#include "reflow_lens/spincoat.hpp"

namespace reflow::svg {

/// Two stacked line charts (lens diameter and sag height against spin speed),
/// one labelled curve per pattern diameter.
void write_sweep_chart(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace reflow::svg
