#pragma once

#include <json.hpp>

#include "lhom/engine.hpp"
#include "lhom/fibcat.hpp"

namespace lhom {

/// JSON report builders, all schema-versioned with {"schema": 1}. Output
/// is deterministic: keys are sorted and rows follow the library's fixed
/// enumeration orders.
nlohmann::json report_validation(const ValidationReport& r);
nlohmann::json report_homology(const std::vector<HomologyRow>& rows);
nlohmann::json report_poset(const PosetReport& r);
nlohmann::json report_suite(const SuiteReport& r);
nlohmann::json report_fibration(const FibReport& r);
nlohmann::json report_search(const SearchIvResult& r, std::size_t max_witnesses);
nlohmann::json report_meet_witness(const std::optional<MeetWitness>& w);

}  // namespace lhom
