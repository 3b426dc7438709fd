#include "reflow_lens/table3.hpp"

#include "reflow_lens/conservation.hpp"

namespace reflow {

std::vector<Table3Row> reproduce_table3(ContactAngle theta, VolumeConvention convention) {
  std::vector<Table3Row> rows;
  for (std::size_t i = 0; i < kPublishedTable.size(); ++i) {
    const PublishedLensRow& pub = kPublishedTable[i];
    const double thickness = kTable3ThicknessUm[i];
    const double diameter = forward_lens_diameter({pub.pattern_um, thickness}, theta, convention);
    const LensGeometry printed = make_lens_from_sag(pub.theoretical_diameter_um,
                                                    pub.theoretical_height_um, convention);
    rows.push_back({
        .published = pub,
        .thickness_um = thickness,
        .predicted = make_lens(diameter, theta, convention),
        .published_comparison = compare_to_theory(
            {pub.experimental_diameter_um, pub.experimental_height_um}, printed),
    });
  }
  return rows;
}

}  // namespace reflow
