#include "mscensus/census_io.hpp"

#include "mscensus/errors.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>

namespace mscensus {

using nlohmann::json;

namespace {

std::vector<IndexPair> class_pairs(const FinitePoset& poset, const MorphismClass& c)
{
    std::vector<IndexPair> out;
    c.for_each([&](std::size_t r) {
        const auto& rel = poset.rel(r);
        out.emplace_back(rel.src, rel.dst);
    });
    return out;
}

std::vector<std::size_t> element_list(ElementSet s)
{
    std::vector<std::size_t> out;
    for (; s != 0; s &= s - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    }
    return out;
}

json pair_list(const std::vector<IndexPair>& pairs)
{
    json out = json::array();
    for (const auto& [a, b] : pairs) {
        out.push_back({a, b});
    }
    return out;
}

std::vector<IndexPair> read_pairs(const json& j)
{
    std::vector<IndexPair> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) {
            throw validation_error("expected a pair of indices");
        }
        out.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    return out;
}

json id_pair_list(const std::vector<std::pair<IndexPair, IndexPair>>& edges)
{
    json out = json::array();
    for (const auto& [a, b] : edges) {
        out.push_back({{a.first, a.second}, {b.first, b.second}});
    }
    return out;
}

std::vector<std::pair<IndexPair, IndexPair>> read_id_pairs(const json& j)
{
    std::vector<std::pair<IndexPair, IndexPair>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) {
            throw validation_error("expected a pair of ids");
        }
        const auto a = read_pairs(json::array({e[0]}));
        const auto b = read_pairs(json::array({e[1]}));
        out.emplace_back(a.front(), b.front());
    }
    return out;
}

const char* table_name(CsvTable t)
{
    switch (t) {
    case CsvTable::factorization_systems:
        return "factorization_systems";
    case CsvTable::model_structures:
        return "model_structures";
    case CsvTable::moore_families:
        return "moore_families";
    case CsvTable::replacement_pairs:
        return "replacement_pairs";
    }
    return "unknown";
}

std::string joined(const std::vector<std::size_t>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string joined(const std::vector<IndexPair>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += std::to_string(xs[i].first) + "<" + std::to_string(xs[i].second);
    }
    return out;
}

const char* flag(bool b)
{
    return b ? "1" : "0";
}

} // namespace

PosetDocument parse_poset_document(const json& j)
{
    try {
        PosetDocument doc;
        doc.elements = j.at("elements").get<std::vector<std::string>>();
        doc.leq_pairs = read_pairs(j.at("leq_pairs"));
        doc.skeletonize = j.value("skeletonize", false);
        return doc;
    } catch (const json::exception& e) {
        throw validation_error(std::string("malformed poset document: ") + e.what());
    }
}

json poset_document_json(const PosetDocument& doc)
{
    return {{"elements", doc.elements},
            {"leq_pairs", pair_list(doc.leq_pairs)},
            {"skeletonize", doc.skeletonize}};
}

PosetPtr load_poset(const PosetDocument& doc)
{
    const std::size_t n = doc.elements.size();
    if (n == 0) {
        throw validation_error("poset document has no elements");
    }
    if (n > FinitePoset::kMaxElements) {
        throw size_limit_error("poset document has more than 64 elements");
    }
    for (const auto& [a, b] : doc.leq_pairs) {
        if (a >= n || b >= n) {
            throw validation_error("leq pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                   ") is out of range");
        }
    }
    const auto leq = reflexive_transitive_closure(n, doc.leq_pairs);
    if (doc.skeletonize) {
        return skeletonize(leq, doc.elements).poset;
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (leq[a][b] && leq[b][a]) {
                throw validation_error("elements '" + doc.elements[a] + "' and '" +
                                       doc.elements[b] +
                                       "' are equivalent; set skeletonize to merge them");
            }
        }
    }
    return poset_from_relation(leq, doc.elements);
}

PosetDocument describe_poset(const FinitePoset& poset)
{
    PosetDocument doc;
    doc.elements = poset.element_names();
    for (const auto& r : poset.rels()) {
        if (r.src == r.dst) {
            continue;
        }
        ElementSet between = poset.up_set(r.src) & poset.down_set(r.dst);
        between &= ~((ElementSet{1} << r.src) | (ElementSet{1} << r.dst));
        if (between == 0) {
            doc.leq_pairs.emplace_back(r.src, r.dst);
        }
    }
    return doc;
}

json census_json(const CensusDocument& doc)
{
    json j;
    j["poset"] = poset_document_json(doc.poset);
    j["poset"]["boolean_rank"] = doc.boolean_rank ? json(*doc.boolean_rank) : json(nullptr);
    j["summary"] = doc.summary;
    if (doc.factorization_systems) {
        json list = json::array();
        for (const auto& f : *doc.factorization_systems) {
            list.push_back({{"id", f.id},
                            {"L", pair_list(f.left)},
                            {"R", pair_list(f.right)},
                            {"retractile", f.retractile},
                            {"sectile", f.sectile},
                            {"topological", f.topological},
                            {"matroidal", f.matroidal},
                            {"geometric", f.geometric},
                            {"distance", f.distance}});
        }
        j["factorization_systems"] = std::move(list);
    }
    if (doc.model_structures) {
        json list = json::array();
        for (const auto& m : *doc.model_structures) {
            list.push_back({{"id", {m.id.first, m.id.second}},
                            {"cof", pair_list(m.cof)},
                            {"we", pair_list(m.we)},
                            {"fib", pair_list(m.fib)},
                            {"fibrant", m.fibrant},
                            {"cofibrant", m.cofibrant},
                            {"bifibrant", m.bifibrant},
                            {"strong", m.strong},
                            {"topological", m.topological},
                            {"matroidal", m.matroidal},
                            {"geometric", m.geometric},
                            {"distance", m.distance ? json(*m.distance) : json(nullptr)},
                            {"component", m.component}});
        }
        j["model_structures"] = std::move(list);
    }
    if (doc.quiver) {
        j["quiver"] = {{"localizations", id_pair_list(doc.quiver->localizations)},
                       {"colocalizations", id_pair_list(doc.quiver->colocalizations)}};
    }
    if (doc.moore_families) {
        json list = json::array();
        for (const auto& m : *doc.moore_families) {
            list.push_back({{"sets", m.sets},
                            {"topology", m.topology},
                            {"matroid", m.matroid},
                            {"geometry", m.geometry}});
        }
        j["moore_families"] = std::move(list);
    }
    if (doc.replacement_pairs) {
        json list = json::array();
        for (const auto& p : *doc.replacement_pairs) {
            list.push_back({{"closure_family", p.closure_family},
                            {"interior_family", p.interior_family},
                            {"orthogonal", p.orthogonal}});
        }
        j["replacement_pairs"] = std::move(list);
    }
    j["meta"] = {{"version", doc.meta.version},
                 {"poset_hash", doc.meta.poset_hash},
                 {"timing", doc.meta.timing}};
    return j;
}

CensusDocument parse_census(const json& j)
{
    try {
        CensusDocument doc;
        doc.poset = parse_poset_document(j.at("poset"));
        const auto& rank = j.at("poset").at("boolean_rank");
        if (!rank.is_null()) {
            doc.boolean_rank = rank.get<unsigned>();
        }
        doc.summary = j.at("summary").get<std::map<std::string, std::size_t>>();
        if (j.contains("factorization_systems")) {
            auto& list = doc.factorization_systems.emplace();
            for (const auto& f : j["factorization_systems"]) {
                FactorizationRecord r;
                r.id = f.at("id").get<std::size_t>();
                r.left = read_pairs(f.at("L"));
                r.right = read_pairs(f.at("R"));
                r.retractile = f.at("retractile").get<bool>();
                r.sectile = f.at("sectile").get<bool>();
                r.topological = f.at("topological").get<bool>();
                r.matroidal = f.at("matroidal").get<bool>();
                r.geometric = f.at("geometric").get<bool>();
                r.distance = f.at("distance").get<std::size_t>();
                list.push_back(std::move(r));
            }
        }
        if (j.contains("model_structures")) {
            auto& list = doc.model_structures.emplace();
            for (const auto& m : j["model_structures"]) {
                ModelRecord r;
                r.id = read_pairs(json::array({m.at("id")})).front();
                r.cof = read_pairs(m.at("cof"));
                r.we = read_pairs(m.at("we"));
                r.fib = read_pairs(m.at("fib"));
                r.fibrant = m.at("fibrant").get<std::vector<std::size_t>>();
                r.cofibrant = m.at("cofibrant").get<std::vector<std::size_t>>();
                r.bifibrant = m.at("bifibrant").get<std::vector<std::size_t>>();
                r.strong = m.at("strong").get<bool>();
                r.topological = m.at("topological").get<bool>();
                r.matroidal = m.at("matroidal").get<bool>();
                r.geometric = m.at("geometric").get<bool>();
                if (!m.at("distance").is_null()) {
                    r.distance = m["distance"].get<std::size_t>();
                }
                r.component = m.at("component").get<std::size_t>();
                list.push_back(std::move(r));
            }
        }
        if (j.contains("quiver")) {
            auto& q = doc.quiver.emplace();
            q.localizations = read_id_pairs(j["quiver"].at("localizations"));
            q.colocalizations = read_id_pairs(j["quiver"].at("colocalizations"));
        }
        if (j.contains("moore_families")) {
            auto& list = doc.moore_families.emplace();
            for (const auto& m : j["moore_families"]) {
                list.push_back({m.at("sets").get<std::vector<std::size_t>>(),
                                m.at("topology").get<bool>(), m.at("matroid").get<bool>(),
                                m.at("geometry").get<bool>()});
            }
        }
        if (j.contains("replacement_pairs")) {
            auto& list = doc.replacement_pairs.emplace();
            for (const auto& p : j["replacement_pairs"]) {
                list.push_back({p.at("closure_family").get<std::size_t>(),
                                p.at("interior_family").get<std::size_t>(),
                                p.at("orthogonal").get<bool>()});
            }
        }
        const auto& meta = j.at("meta");
        doc.meta.version = meta.at("version").get<std::string>();
        doc.meta.poset_hash = meta.at("poset_hash").get<std::string>();
        doc.meta.timing = meta.at("timing").get<std::map<std::string, double>>();
        return doc;
    } catch (const json::exception& e) {
        throw validation_error(std::string("malformed census document: ") + e.what());
    }
}

std::string dump_census(const CensusDocument& doc)
{
    return census_json(doc).dump(2) + "\n";
}

std::string dump_census_without_timing(const CensusDocument& doc)
{
    auto j = census_json(doc);
    j["meta"].erase("timing");
    return j.dump(2) + "\n";
}

CensusDocument new_document(const FinitePoset& poset)
{
    CensusDocument doc;
    doc.boolean_rank = poset.boolean_rank();
    doc.poset = describe_poset(poset);
    doc.meta.poset_hash = poset.hash_hex();
    return doc;
}

void add_factorization_systems(CensusDocument& doc, const BracketCatalog& catalog)
{
    const auto& poset = *catalog.poset();
    const auto distances = fs_distances(catalog);
    const auto rank = poset.boolean_rank();
    const bool flagged = rank && *rank <= kMaxMooreRank;
    const Element top = poset.top().value_or(0);
    auto& list = doc.factorization_systems.emplace();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const auto& info = catalog[i];
        FactorizationRecord r;
        r.id = i;
        r.left = class_pairs(poset, info.L);
        r.right = class_pairs(poset, info.R);
        r.retractile = info.retractile;
        r.sectile = info.sectile;
        if (flagged && info.retractile) {
            std::vector<Element> table(poset.size());
            for (Element x = 0; x < poset.size(); ++x) {
                table[x] = info.phi(x, top);
            }
            const auto family = family_from_closure(ClosureOperator(catalog.poset(), table));
            r.topological = is_topology(family);
            r.matroidal = is_matroid(family);
            r.geometric = is_geometry(family);
        }
        r.distance = distances[i];
        list.push_back(std::move(r));
    }
    doc.summary["factorization_systems"] = catalog.size();
}

ModelRecord model_record(const ModelStructure& ms)
{
    const auto& poset = *ms.poset();
    ModelRecord r;
    if (ms.ids) {
        r.id = *ms.ids;
    }
    r.cof = class_pairs(poset, ms.cof);
    r.we = class_pairs(poset, ms.we);
    r.fib = class_pairs(poset, ms.fib);
    r.fibrant = element_list(ms.fibrant);
    r.cofibrant = element_list(ms.cofibrant);
    r.bifibrant = element_list(ms.bifibrant);
    r.strong = ms.flags.strong;
    r.topological = ms.flags.topological;
    r.matroidal = ms.flags.matroidal;
    r.geometric = ms.flags.geometric;
    return r;
}

void add_model_structures(CensusDocument& doc, const std::vector<ModelStructure>& structures,
                          const BousfieldQuiver* quiver)
{
    if (quiver != nullptr && quiver->nodes.size() != structures.size()) {
        throw argument_error("quiver does not match the structure list");
    }
    auto& list = doc.model_structures.emplace();
    std::size_t strong = 0;
    std::size_t topological = 0;
    std::size_t matroidal = 0;
    std::size_t geometric = 0;
    for (std::size_t i = 0; i < structures.size(); ++i) {
        auto r = model_record(structures[i]);
        if (quiver != nullptr) {
            r.distance = quiver->nodes[i].distance;
            r.component = quiver->nodes[i].component;
        }
        strong += r.strong;
        topological += r.topological;
        matroidal += r.matroidal;
        geometric += r.geometric;
        list.push_back(std::move(r));
    }
    doc.summary["model_structures"] = structures.size();
    doc.summary["strong"] = strong;
    doc.summary["topological"] = topological;
    doc.summary["matroidal"] = matroidal;
    doc.summary["geometric"] = geometric;
}

void add_quiver(CensusDocument& doc, const BousfieldQuiver& quiver)
{
    auto& q = doc.quiver.emplace();
    auto convert = [&](const std::vector<Edge>& edges) {
        std::vector<std::pair<IndexPair, IndexPair>> out;
        for (const auto& [a, b] : edges) {
            out.emplace_back(quiver.nodes[a].id, quiver.nodes[b].id);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    q.localizations = convert(quiver.localizations);
    q.colocalizations = convert(quiver.colocalizations);
    const auto h = ms_distance_histogram(quiver);
    doc.summary["components"] = quiver.component_count;
    doc.summary["radius"] = h.radius;
    doc.summary["unreachable"] = h.unreachable;
}

void add_moore_families(CensusDocument& doc, const std::vector<MooreFamily>& families)
{
    auto& list = doc.moore_families.emplace();
    std::size_t topologies = 0;
    for (const auto& m : families) {
        MooreRecord r;
        for (auto s : m.sets()) {
            r.sets.push_back(s);
        }
        r.topology = is_topology(m);
        r.matroid = is_matroid(m);
        r.geometry = is_geometry(m);
        topologies += r.topology;
        list.push_back(std::move(r));
    }
    doc.summary["moore"] = families.size();
    doc.summary["topologies"] = topologies;
}

void add_pairs(CensusDocument& doc, const PairCensus& census)
{
    add_moore_families(doc, census.families);
    auto& list = doc.replacement_pairs.emplace();
    std::size_t orthogonal = 0;
    for (const auto& p : census.pairs) {
        list.push_back({p.closure_family, p.interior_family, p.orthogonal});
        orthogonal += p.orthogonal;
    }
    doc.summary["pairs"] = census.pairs.size();
    doc.summary["orthogonal"] = orthogonal;
}

std::string census_csv(const CensusDocument& doc, CsvTable table)
{
    std::ostringstream out;
    auto missing = [&]() {
        return argument_error(std::string("document has no ") + table_name(table) + " section");
    };
    switch (table) {
    case CsvTable::factorization_systems:
        if (!doc.factorization_systems) {
            throw missing();
        }
        out << "id,distance,retractile,sectile,topological,matroidal,geometric,L,R\n";
        for (const auto& f : *doc.factorization_systems) {
            out << f.id << ',' << f.distance << ',' << flag(f.retractile) << ','
                << flag(f.sectile) << ',' << flag(f.topological) << ',' << flag(f.matroidal)
                << ',' << flag(f.geometric) << ',' << joined(f.left) << ',' << joined(f.right)
                << '\n';
        }
        break;
    case CsvTable::model_structures:
        if (!doc.model_structures) {
            throw missing();
        }
        out << "phi,psi,strong,topological,matroidal,geometric,distance,component,fibrant,"
               "cofibrant,bifibrant\n";
        for (const auto& m : *doc.model_structures) {
            out << m.id.first << ',' << m.id.second << ',' << flag(m.strong) << ','
                << flag(m.topological) << ',' << flag(m.matroidal) << ',' << flag(m.geometric)
                << ',' << (m.distance ? std::to_string(*m.distance) : std::string()) << ','
                << m.component << ',' << joined(m.fibrant) << ',' << joined(m.cofibrant) << ','
                << joined(m.bifibrant) << '\n';
        }
        break;
    case CsvTable::moore_families:
        if (!doc.moore_families) {
            throw missing();
        }
        out << "index,topology,matroid,geometry,sets\n";
        for (std::size_t i = 0; i < doc.moore_families->size(); ++i) {
            const auto& m = (*doc.moore_families)[i];
            out << i << ',' << flag(m.topology) << ',' << flag(m.matroid) << ','
                << flag(m.geometry) << ',' << joined(m.sets) << '\n';
        }
        break;
    case CsvTable::replacement_pairs:
        if (!doc.replacement_pairs) {
            throw missing();
        }
        out << "closure_family,interior_family,orthogonal\n";
        for (const auto& p : *doc.replacement_pairs) {
            out << p.closure_family << ',' << p.interior_family << ',' << flag(p.orthogonal)
                << '\n';
        }
        break;
    }
    return out.str();
}

std::string quiver_dot(const CensusDocument& doc)
{
    static const char* const palette[] = {"red",    "orange", "yellow", "green", "blue",
                                          "indigo", "violet", "olive",  "cyan",  "brown",
                                          "gray",   "pink",   "yellowgreen"};
    if (!doc.model_structures || !doc.quiver) {
        throw argument_error("quiver export needs model structures and quiver sections");
    }
    const auto& nodes = *doc.model_structures;
    std::map<IndexPair, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        index[nodes[i].id] = i;
    }
    auto reduced = [&](const std::vector<std::pair<IndexPair, IndexPair>>& edges) {
        std::vector<Edge> local;
        for (const auto& [a, b] : edges) {
            const auto ia = index.find(a);
            const auto ib = index.find(b);
            if (ia == index.end() || ib == index.end()) {
                throw validation_error("quiver edge refers to an unknown model structure");
            }
            local.emplace_back(ia->second, ib->second);
        }
        return transitive_reduction(nodes.size(), local);
    };

    std::ostringstream out;
    out << "digraph bousfield {\n";
    out << "  node [shape=box, style=filled, penwidth=3];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& m = nodes[i];
        std::string fill = "white";
        std::string style = "filled";
        if (m.geometric) {
            fill = "red";
        } else if (m.topological && m.matroidal) {
            fill = "lightblue:orange";
            style = "striped";
        } else if (m.matroidal) {
            fill = "orange";
        } else if (m.topological) {
            fill = "lightblue";
        }
        std::string border = "black";
        if (m.distance) {
            border = palette[*m.distance % std::size(palette)];
        }
        out << "  n" << i << " [label=\"(" << m.id.first << ',' << m.id.second << ')'
            << (m.strong ? "*" : "") << "\", fillcolor=\"" << fill << "\", style=\"" << style
            << "\", color=\"" << border << "\"];\n";
    }
    for (const auto& [a, b] : reduced(doc.quiver->localizations)) {
        out << "  n" << a << " -> n" << b << " [style=solid];\n";
    }
    for (const auto& [a, b] : reduced(doc.quiver->colocalizations)) {
        out << "  n" << a << " -> n" << b << " [style=dashed];\n";
    }
    out << "}\n";
    return out.str();
}

CensusDocument model_census_document(const PosetPtr& poset, const EnumerationOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const auto census = enumerate_model_structures(poset, options);
    const auto quiver = build_quiver(census.structures, options.jobs);
    auto doc = new_document(*poset);
    add_factorization_systems(doc, census.catalog);
    add_model_structures(doc, census.structures, &quiver);
    add_quiver(doc, quiver);
    doc.summary["localization_pairs"] = census.localization_pairs.size();
    doc.meta.timing["total_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return doc;
}

} // namespace mscensus
