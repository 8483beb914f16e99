#pragma once

#include <string>

#include "qchu/chu.hpp"
#include "qchu/ortho.hpp"
#include "qchu/state_space.hpp"
#include "qchu/symmetry.hpp"

namespace qchu {

// Three JSON document kinds, all UTF-8:
//   chu3        {"kind":"chu3","preparations":[..],"tests":[..],"evaluation":[[..]]}
//               with cells "Y" | "N" | "_", rows indexed by preparation;
//   state_space {"kind":"state_space","elements":[..],"leq":[["x","y"],..],
//                "star":{"x":"x*",..}?,"scheme":[["s","s'"],..]?}
//               where the loader takes the reflexive-transitive closure of leq;
//   dictionary  {"kind":"dictionary","source":file,"target":file,
//                "f_states":{..},"f_tests":{"[s,s']":"[u,u']",..}}.
// Saving is canonical: sorted keys, sorted element lists, cover pairs only.

ChuSpace load_chu_text(const std::string& text);
ChuSpace load_chu_file(const std::string& path);
std::string save_chu(const ChuSpace& space);

StateSpace load_state_space_text(const std::string& text);
StateSpace load_state_space_file(const std::string& path);
std::string save_state_space(const StateSpace& space);

/// Resolves the source/target file references relative to the dictionary
/// file's directory.
Dictionary load_dictionary_file(const std::string& path);
Dictionary load_dictionary_text(const std::string& text, const std::string& base_dir);
std::string save_dictionary(const Dictionary& D, const std::string& source_file,
                            const std::string& target_file);

/// Hasse diagram of the closed sets: one node per set, edges are covers.
std::string dot_closed_set_lattice(const ClosedSetLattice& L);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace qchu
