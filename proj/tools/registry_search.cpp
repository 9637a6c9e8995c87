// Regenerates the literal registry data: one line per fingerprint class.
// --audit also confirms, by a full pass over W(E7), that stored variants of
// one type lie in different orbits.
#include <cstring>
#include <iostream>

#include "dpl/configuration.hpp"
#include "dpl/weyl.hpp"

int main(int argc, char** argv) {
  const bool audit = argc > 1 && std::strcmp(argv[1], "--audit") == 0;
  const auto& cat = dpl::degree2_catalog();
  for (const auto& r : dpl::search_configurations(cat)) {
    std::cout << r.type.name() << "\t" << r.fingerprint.free_curves() << "\t" << r.fingerprint.digest() << "\t";
    for (auto i : r.roots) std::cout << cat.root_name(i) << ' ';
    std::cout << '\n';
  }
  if (!audit) return 0;

  const dpl::E7RootSystem sys(cat);
  const auto group = dpl::WeylGroup::generate(sys);
  auto indices = [&](const dpl::RegistryEntry& e) {
    std::vector<std::size_t> out;
    for (const auto& n : e.roots) out.push_back(cat.root_by_name(n));
    return out;
  };
  int bad = 0;
  const auto& entries = dpl::registry_entries();
  for (std::size_t a = 0; a < entries.size(); ++a)
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      if (entries[a].type != entries[b].type) continue;
      const bool same = dpl::find_mapping(group, indices(entries[a]), indices(entries[b])).has_value();
      std::cout << "audit " << entries[a].type << " " << entries[a].variant << " vs " << entries[b].variant << ": "
                << (same ? "SAME ORBIT" : "distinct orbits") << '\n';
      bad += same;
    }
  return bad == 0 ? 0 : 1;
}
