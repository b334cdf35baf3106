#pragma once

#include "heaptl/boundary.hpp"
#include "heaptl/star.hpp"
#include "heaptl/tl.hpp"

#include <map>
#include <string>
#include <vector>

namespace heaptl {

struct CheckViolation {
  std::string check;
  Word element;  // canonical word of the element under test
  std::string detail;
  friend bool operator<(const CheckViolation& a, const CheckViolation& b) {
    WordOrder lt;
    if (a.element != b.element) return lt(a.element, b.element);
    if (a.check != b.check) return a.check < b.check;
    return a.detail < b.detail;
  }
};

// ---------------------------------------------------------------------------
// Forbidden trace configurations.
//
// Scans quantify over the full commutation class of each FC heap: a match is
// a word of the class exhibiting the pattern, which would refute the
// corresponding structural property. Patterns are selected automatically
// from the graph shape.
// ---------------------------------------------------------------------------

struct TracePattern {
  std::string name;
  std::vector<int> block1, block2;  // contiguous letter blocks
  std::vector<int> excluded;        // letters forbidden strictly between them
};

// Patterns applicable to this graph (line families with strong bonds).
std::vector<TracePattern> applicable_patterns(const CoxeterGraph& g);

// Pattern check for one word; returns true when the word contains block1,
// then block2, with no excluded letter strictly between the blocks.
bool word_matches_pattern(const Word& w, const TracePattern& p);

std::vector<CheckViolation> forbidden_scan_element(const FCElement& w);

struct ForbiddenScanReport {
  long elements = 0;
  bool family_recognized = true;
  std::vector<CheckViolation> matches;
};
ForbiddenScanReport forbidden_scan(const GraphPtr& g, int max_len);

// ---------------------------------------------------------------------------
// Lemma battery: structural invariants checked over exhaustive FC
// enumeration plus seeded random words and subheaps.
// ---------------------------------------------------------------------------

struct BatteryOptions {
  int max_len = 8;
  int tl_word_len = 8;      // budget for algebra-side word checks
  int random_words = 200;   // random (not necessarily reduced) words
  int samples_per_heap = 4; // random convex subheaps per element
  unsigned seed = 20250810;
  bool include_algebra = true;
};

struct BatteryReport {
  long elements = 0;
  std::map<std::string, long> assertions;  // per-check assertion counts
  std::vector<CheckViolation> violations;
};
BatteryReport lemma_battery(const GraphPtr& g, const BatteryOptions& opt);

// ---------------------------------------------------------------------------
// Campaign driver.
// ---------------------------------------------------------------------------

struct CampaignConfig {
  int max_len = 0;
  std::vector<std::string> checks;  // subset of campaign_check_names()
  int jobs = 1;
  bool assume_star_reducible = true;
};

const std::vector<std::string>& campaign_check_names();

struct CampaignResult {
  long elements = 0;
  std::vector<long> by_length;
  std::map<std::string, long> assertions;
  std::vector<CheckViolation> violations;
};

CampaignResult run_campaign(const GraphPtr& g, const CampaignConfig& cfg);

}  // namespace heaptl
