#ifndef CANTORLAB_JSON_IO_HPP
#define CANTORLAB_JSON_IO_HPP

#include <json.hpp>

#include "cantorlab/clopen.hpp"
#include "cantorlab/homeo.hpp"
#include "cantorlab/lattice_iso.hpp"
#include "cantorlab/pbij.hpp"
#include "cantorlab/semilattice.hpp"

namespace cantorlab {

using json = nlohmann::json;

// {"entries": [[s,t],...]} sorted by s
json to_json(const PartialBijection& f);
PartialBijection pbij_from_json(const json& j);

// {"size": n, "product": [[...]], "inverse": [...]}
json to_json(const FiniteInverseSemigroup& s);
FiniteInverseSemigroup fis_from_json(const json& j);

// {"size": n, "meet": [[...]]}
json to_json(const FiniteSemilattice& e);
FiniteSemilattice semilattice_from_json(const json& j);

// {"map": {...}, "source_apex": x, "target_apex": y}
json to_json(const MunnElement& m);

// {"words": ["00","1",...]}, "" for the whole-space word
json to_json(const Clopen& c);
Clopen clopen_from_json(const json& j);

// {"rules": [["00","0"],...]}
json to_json(const PrefixMap& h);
PrefixMap prefix_map_from_json(const json& j);

// {"depth": d, "entries": [[clopen, clopen], ...]}
json to_json(const TruncatedLatticeMap& m);
TruncatedLatticeMap tlm_from_json(const json& j);

json to_json(const Rational& r);
json to_json(const ConvergenceVerdict& v);

}  // namespace cantorlab

#endif
