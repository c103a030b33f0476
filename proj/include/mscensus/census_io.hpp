#pragma once

#include "mscensus/brackets.hpp"
#include "mscensus/closure.hpp"
#include "mscensus/pairs.hpp"
#include "mscensus/quiver.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mscensus {

inline constexpr const char* kToolVersion = "0.1.0";

using IndexPair = std::pair<std::size_t, std::size_t>;

// Input poset: names plus a generating relation, closed reflexively and
// transitively on load.
struct PosetDocument {
    std::vector<std::string> elements;
    std::vector<IndexPair> leq_pairs;
    bool skeletonize = false;
};

PosetDocument parse_poset_document(const nlohmann::json& j);
nlohmann::json poset_document_json(const PosetDocument& doc);
// Throws validation_error on out-of-range indices or, without skeletonize,
// a relation that is not antisymmetric.
PosetPtr load_poset(const PosetDocument& doc);
// Element names and covering pairs of a poset.
PosetDocument describe_poset(const FinitePoset& poset);

struct FactorizationRecord {
    std::size_t id = 0;
    std::vector<IndexPair> left;
    std::vector<IndexPair> right;
    bool retractile = false;
    bool sectile = false;
    // Properties of the fixed points of x -> Phi(x, top) for retractile systems
    // on Boolean algebras; false otherwise.
    bool topological = false;
    bool matroidal = false;
    bool geometric = false;
    std::size_t distance = 0;
};

struct ModelRecord {
    IndexPair id;
    std::vector<IndexPair> cof;
    std::vector<IndexPair> we;
    std::vector<IndexPair> fib;
    std::vector<std::size_t> fibrant;
    std::vector<std::size_t> cofibrant;
    std::vector<std::size_t> bifibrant;
    bool strong = false;
    bool topological = false;
    bool matroidal = false;
    bool geometric = false;
    std::optional<std::size_t> distance;
    std::size_t component = 0;
};

struct MooreRecord {
    std::vector<std::size_t> sets;
    bool topology = false;
    bool matroid = false;
    bool geometry = false;
};

struct PairRecord {
    std::size_t closure_family = 0;
    std::size_t interior_family = 0;
    bool orthogonal = false;
};

struct QuiverRecord {
    std::vector<std::pair<IndexPair, IndexPair>> localizations;
    std::vector<std::pair<IndexPair, IndexPair>> colocalizations;
};

struct CensusMeta {
    std::string version = kToolVersion;
    std::string poset_hash;
    std::map<std::string, double> timing;
};

// Sections are present only when computed.
struct CensusDocument {
    std::optional<unsigned> boolean_rank;
    PosetDocument poset;
    std::map<std::string, std::size_t> summary;
    std::optional<std::vector<FactorizationRecord>> factorization_systems;
    std::optional<std::vector<ModelRecord>> model_structures;
    std::optional<QuiverRecord> quiver;
    std::optional<std::vector<MooreRecord>> moore_families;
    std::optional<std::vector<PairRecord>> replacement_pairs;
    CensusMeta meta;
};

nlohmann::json census_json(const CensusDocument& doc);
// Throws validation_error on malformed input.
CensusDocument parse_census(const nlohmann::json& j);
// Two-space indented JSON with a trailing newline.
std::string dump_census(const CensusDocument& doc);
// As dump_census with meta.timing removed.
std::string dump_census_without_timing(const CensusDocument& doc);

CensusDocument new_document(const FinitePoset& poset);
void add_factorization_systems(CensusDocument& doc, const BracketCatalog& catalog);
void add_model_structures(CensusDocument& doc, const std::vector<ModelStructure>& structures,
                          const BousfieldQuiver* quiver);
void add_quiver(CensusDocument& doc, const BousfieldQuiver& quiver);
void add_moore_families(CensusDocument& doc, const std::vector<MooreFamily>& families);
void add_pairs(CensusDocument& doc, const PairCensus& census);

ModelRecord model_record(const ModelStructure& ms);

// Factorization systems, model structures and quiver of one poset in a single
// document, with total_seconds recorded under meta.timing.
CensusDocument model_census_document(const PosetPtr& poset, const EnumerationOptions& options);

enum class CsvTable { factorization_systems, model_structures, moore_families, replacement_pairs };

// Flat projection of one section. Element lists are space separated indices.
std::string census_csv(const CensusDocument& doc, CsvTable table);

// Graphviz rendering of the model-structure quiver: reduced localizations
// solid, reduced colocalizations dashed.
std::string quiver_dot(const CensusDocument& doc);

} // namespace mscensus
