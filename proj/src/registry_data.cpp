#include "dpl/configuration.hpp"

namespace dpl {

// Written out by tools/registry_search; a unit test regenerates and compares.
// Types with two Weyl orbits carry a variant tag; "1"/"2" follow the numbered
// layouts of the reference classification.
const std::vector<RegistryEntry>& registry_entries() {
  static const std::vector<RegistryEntry> entries = {
      {"A1", "", {"A'12"}, false, ""},
      {"A2", "", {"A'12", "A'23"}, false, ""},
      {"A3", "", {"A'12", "A'23", "A'34"}, false, ""},
      {"A4", "", {"A'12", "A'23", "A'34", "A'45"}, false, ""},
      {"A5", "1", {"B'167", "A'12", "A'23", "A'34", "A'45"}, false, ""},
      {"A5", "2", {"A'12", "A'23", "A'34", "A'45", "A'56"}, false, ""},
      {"A6", "", {"A'12", "A'23", "A'34", "A'45", "A'56", "A'67"}, false, ""},
      {"A7", "", {"B'145", "B'123", "A'12", "A'23", "A'37", "A'45", "A'56"}, false, ""},
      {"D4", "", {"B'125", "A'12", "A'23", "A'34"}, false, ""},
      {"D5", "", {"B'123", "A'12", "A'23", "A'34", "A'45"}, false, ""},
      {"D6", "", {"B'127", "A'12", "A'23", "A'34", "A'45", "A'56"}, false, ""},
      {"E6", "", {"B'123", "A'12", "A'23", "A'34", "A'45", "A'56"}, false, ""},
      {"E7", "", {"B'123", "A'12", "A'23", "A'34", "A'45", "A'56", "A'67"}, false, ""},
      {"2A1", "", {"A'12", "A'34"}, false, ""},
      {"A1+A2", "", {"A'12", "A'23", "A'45"}, false, ""},
      {"A1+A3", "1", {"B'145", "A'12", "A'23", "A'67"}, false, ""},
      {"A1+A3", "2", {"A'12", "A'23", "A'34", "A'56"}, false, ""},
      {"A1+A4", "", {"A'12", "A'23", "A'34", "A'45", "A'67"}, false, ""},
      {"A1+A5", "a", {"B'123", "A'12", "A'34", "A'45", "A'56", "A'67"}, false, "both orbits give the same curve graph"},
      {"A1+A5", "b", {"B'134", "A'12", "A'25", "A'34", "A'46", "-B'125"}, false, "both orbits give the same curve graph"},
      {"A1+D4", "", {"B'125", "A'12", "A'23", "A'34", "A'67"}, false, ""},
      {"A1+D5", "", {"B'123", "A'12", "A'23", "A'34", "A'45", "A'67"}, false, ""},
      {"A1+D6", "", {"B'145", "B'123", "A'12", "A'23", "A'36", "A'45", "A'67"}, false, ""},
      {"2A2", "", {"A'12", "A'26", "A'34", "A'45"}, false, ""},
      {"A2+A3", "", {"A'12", "A'23", "A'37", "A'45", "A'56"}, false, ""},
      {"A2+A4", "", {"B'123", "A'12", "A'23", "A'37", "A'45", "A'56"}, false, ""},
      {"A2+A5", "", {"B'456", "B'123", "A'12", "A'23", "A'37", "A'45", "A'56"}, false, ""},
      {"2A3", "", {"C'7", "A'12", "A'23", "A'36", "A'45", "A'57"}, false, ""},
      {"3A1", "1", {"A'12", "A'34", "-B'567"}, false, ""},
      {"3A1", "2", {"A'12", "A'34", "A'56"}, false, ""},
      {"2A1+A2", "", {"A'12", "A'23", "A'45", "A'67"}, false, ""},
      {"2A1+A3", "1", {"A'12", "A'23", "A'34", "A'56", "-C'7"}, false, ""},
      {"2A1+A3", "2", {"B'123", "A'12", "A'34", "A'45", "A'67"}, false, ""},
      {"2A1+D4", "", {"B'156", "B'123", "A'14", "A'23", "A'47", "A'56"}, false, ""},
      {"A1+2A2", "", {"A'12", "A'23", "A'45", "A'56", "-B'123"}, false, ""},
      {"A1+A2+A3", "", {"A'12", "A'23", "A'45", "A'56", "A'67", "-B'123"}, false, ""},
      {"A1+2A3", "", {"B'234", "B'167", "B'125", "A'15", "A'23", "A'34", "A'67"}, false, ""},
      {"3A2", "", {"A'12", "A'25", "A'34", "A'46", "-B'125", "-B'346"}, false, ""},
      {"4A1", "with-tri-curve", {"A'12", "A'34", "A'56", "-B'127"}, false, ""},
      {"4A1", "no-tri-curve", {"A'12", "A'34", "A'56", "-C'7"}, false, ""},
      {"3A1+A2", "", {"A'12", "A'23", "A'45", "A'67", "-B'123"}, false, ""},
      {"3A1+A3", "", {"B'134", "A'12", "A'25", "A'34", "A'67", "-B'125"}, false, ""},
      {"3A1+D4", "", {"B'156", "B'134", "A'12", "A'27", "A'34", "A'56", "-B'127"}, false, ""},
      {"5A1", "", {"A'12", "A'34", "A'67", "-B'125", "-B'345"}, false, ""},
      {"6A1", "", {"A'12", "A'35", "A'67", "-B'124", "-B'345", "-B'467"}, false, ""},
      {"7A1", "", {"A'12", "A'35", "A'67", "-B'124", "-B'345", "-B'467", "-C'4"}, true, "only in characteristic 2"},
  };
  return entries;
}

}  // namespace dpl
