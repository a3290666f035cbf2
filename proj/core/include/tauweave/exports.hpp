#pragma once

#include "tauweave/rigidity.hpp"
#include "tauweave/silting_poset.hpp"
#include "tauweave/weak_order.hpp"

#include <string>

namespace tauweave::exports {

// {"order": n+1, "nodes": [[one-line...]...] grouped by length,
//  "edges": [[from,to],...]} with edge (from -> to) meaning `to` covers `from`.
std::string lattice_json(const weak_order::WeakOrderLattice &lat);
std::string lattice_dot(const weak_order::WeakOrderLattice &lat);

// TSV: header, then one row per XiIndex (entries, g-vector).
std::string xi_gvector_tsv(int n);
// {"n": ..., "xi": [...], "hom_vanishes": [[...]...], "compatible": [[...]...]}
std::string xi_compatibility_json(const xi::CompatibilityTable &table);

// Poset export with permutation labels via the isomorphism; edges oriented
// from larger to smaller.
std::string sttilt_json(const silting::SttiltPoset &poset,
                        const silting::Isomorphism &iso);
std::string sttilt_dot(const silting::SttiltPoset &poset,
                       const silting::Isomorphism &iso);

} // namespace tauweave::exports
