// colmon - collision-table monoids and their subshifts
//
// JSON documents for the command-line reports. Words are written as
// space-separated symbols and normal forms as "plus|minus".

#ifndef COLMON_REPORT_HPP_
#define COLMON_REPORT_HPP_

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "colmon/presentation.hpp"
#include "colmon/reconstruction.hpp"
#include "colmon/rewrite.hpp"
#include "colmon/structure.hpp"
#include "colmon/subshift.hpp"

namespace colmon::report {

  using nlohmann::ordered_json;

  ordered_json to_json(Presentation const& p, WitnessReport const& r);
  ordered_json to_json(Presentation const& p, HypothesisReport const& r);
  ordered_json to_json(Presentation const& p, InjectivityReport const& r);
  ordered_json to_json(BoundMeasurement const& b);
  ordered_json to_json(Presentation const& p, PropertyAReport const& r);
  // Class and word counts, plus every representative and the product table
  // when detailed.
  ordered_json to_json(Presentation const&      p,
                       ContextClassTable const& t,
                       bool                     detailed = false);
  ordered_json to_json(Presentation const& p, IsoCertificate const& c);

  // Without a presentation, for reports on files that failed to parse.
  ordered_json to_json(ValidationReport const& r);

}  // namespace colmon::report

#endif  // COLMON_REPORT_HPP_
