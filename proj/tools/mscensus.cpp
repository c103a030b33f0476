#include "mscensus/census_io.hpp"
#include "mscensus/constructions.hpp"
#include "mscensus/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mscensus;
using nlohmann::json;

namespace {

struct Target {
    std::optional<unsigned> boolean;
    std::string poset_file;
};

struct Output {
    std::string path;
    std::string format = "json";
};

void add_target(CLI::App* cmd, Target& t)
{
    auto* b = cmd->add_option("--boolean", t.boolean, "Power-set lattice on N generators");
    auto* p = cmd->add_option("--poset", t.poset_file, "Poset document (JSON)");
    b->excludes(p);
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw argument_error("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw validation_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw argument_error("cannot write '" + path + "'");
    }
    out << text;
}

PosetPtr resolve(const Target& t)
{
    if (t.boolean) {
        return boolean_algebra(*t.boolean);
    }
    if (!t.poset_file.empty()) {
        return load_poset(parse_poset_document(read_json(t.poset_file)));
    }
    throw argument_error("give --boolean N or --poset FILE");
}

unsigned boolean_only(const Target& t, unsigned limit, const char* what)
{
    if (!t.boolean) {
        throw argument_error(std::string(what) + " needs --boolean N");
    }
    if (*t.boolean > limit) {
        throw size_limit_error(std::string(what) + " supports N <= " + std::to_string(limit));
    }
    return *t.boolean;
}

EnumerationOptions enumeration_options(unsigned jobs)
{
    EnumerationOptions options;
    options.jobs = jobs;
    if (const char* budget = std::getenv("MSCENSUS_TIME_BUDGET")) {
        char* end = nullptr;
        const double seconds = std::strtod(budget, &end);
        if (end == budget || *end != '\0' || seconds <= 0) {
            throw argument_error("MSCENSUS_TIME_BUDGET must be a positive number of seconds");
        }
        options.time_budget_seconds = seconds;
    }
    return options;
}

class Stopwatch {
public:
    [[nodiscard]] double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const CensusDocument& doc, const Output& out, CsvTable table)
{
    if (out.path.empty()) {
        return;
    }
    write_text(out.path, out.format == "csv" ? census_csv(doc, table) : dump_census(doc));
}

void print_model_summary(const CensusDocument& doc)
{
    const auto& s = doc.summary;
    std::cout << "model_structures=" << s.at("model_structures") << " strong=" << s.at("strong")
              << "\n";
    std::cout << "topological=" << s.at("topological") << " matroidal=" << s.at("matroidal")
              << " geometric=" << s.at("geometric") << "\n";
    std::cout << "components=" << s.at("components") << " radius=" << s.at("radius")
              << " unreachable=" << s.at("unreachable") << "\n";
}

int run_enumerate(const std::string& kind, const Target& target, unsigned jobs,
                  const Output& out, bool orthogonal_only, bool topologies_only)
{
    if (kind == "fs") {
        const auto poset = resolve(target);
        Stopwatch clock;
        const auto catalog = enumerate_brackets(poset, enumeration_options(jobs));
        auto doc = new_document(*poset);
        add_factorization_systems(doc, catalog);
        doc.summary["localization_pairs"] = localization_relation(catalog).size();
        std::size_t max_distance = 0;
        for (const auto& f : *doc.factorization_systems) {
            max_distance = std::max(max_distance, f.distance);
        }
        doc.summary["max_distance"] = max_distance;
        doc.meta.timing["total_seconds"] = clock.seconds();
        std::cout << "factorization_systems=" << catalog.size()
                  << " localization_pairs=" << doc.summary["localization_pairs"]
                  << " max_distance=" << max_distance << "\n";
        emit(doc, out, CsvTable::factorization_systems);
        return 0;
    }
    if (kind == "ms") {
        const auto doc = model_census_document(resolve(target), enumeration_options(jobs));
        print_model_summary(doc);
        emit(doc, out, CsvTable::model_structures);
        return 0;
    }
    if (kind == "moore") {
        const unsigned n = boolean_only(target, kMaxMooreRank, "enumerate moore");
        Stopwatch clock;
        const auto families = enumerate_moore_families(n);
        auto doc = new_document(*boolean_algebra(n));
        add_moore_families(doc, families);
        doc.meta.timing["total_seconds"] = clock.seconds();
        std::cout << "moore=" << doc.summary["moore"] << " topologies=" << doc.summary["topologies"]
                  << "\n";
        emit(doc, out, CsvTable::moore_families);
        return 0;
    }
    const unsigned n = boolean_only(target, kMaxPairRank, "enumerate pairs");
    Stopwatch clock;
    PairQuery query;
    query.orthogonal_only = orthogonal_only;
    query.topologies_only = topologies_only;
    query.jobs = jobs;
    const auto census = enumerate_replacement_pairs(n, query);
    auto doc = new_document(*boolean_algebra(n));
    add_pairs(doc, census);
    doc.meta.timing["total_seconds"] = clock.seconds();
    if (orthogonal_only) {
        std::cout << "orthogonal=" << doc.summary["orthogonal"] << "\n";
    } else {
        std::cout << "compatible=" << doc.summary["pairs"]
                  << " orthogonal=" << doc.summary["orthogonal"] << "\n";
    }
    emit(doc, out, CsvTable::replacement_pairs);
    return 0;
}

int run_quiver(const Target& target, unsigned jobs, const std::string& from,
               const std::string& dot_path, const std::string& census_path)
{
    CensusDocument doc;
    if (!from.empty()) {
        doc = parse_census(read_json(from));
    } else {
        doc = model_census_document(resolve(target), enumeration_options(jobs));
    }
    const auto dot = quiver_dot(doc);
    if (dot_path.empty()) {
        std::cout << dot;
    } else {
        write_text(dot_path, dot);
        std::cout << "nodes=" << doc.model_structures->size()
                  << " components=" << doc.summary.at("components")
                  << " radius=" << doc.summary.at("radius") << "\n";
    }
    if (!census_path.empty()) {
        write_text(census_path, dump_census(doc));
    }
    return 0;
}

ReplacementPair read_pair(const PosetPtr& poset, const std::string& path)
{
    const auto j = read_json(path);
    try {
        return {ClosureOperator(poset, j.at("F").get<std::vector<Element>>()),
                InteriorOperator(poset, j.at("C").get<std::vector<Element>>())};
    } catch (const json::exception& e) {
        throw validation_error("'" + path + "' needs integer tables F and C: " + e.what());
    }
}

ElementSet parse_objects(const FinitePoset& poset, const std::string& spec)
{
    if (spec == "ALL") {
        return poset.all_elements();
    }
    if (spec == "NONE" || spec.empty()) {
        return 0;
    }
    ElementSet out = 0;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        unsigned long index = 0;
        try {
            index = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty() || index >= poset.size()) {
            throw argument_error("bad element index '" + item + "'");
        }
        out |= ElementSet{1} << index;
    }
    return out;
}

int run_check_pair(const Target& target, const std::string& pair_file)
{
    const auto poset = resolve(target);
    const auto p = read_pair(poset, pair_file);
    const auto compat = compatibility_violation(p);
    const auto orth = orthogonality_violation(p);
    std::cout << "compatible=" << (compat ? "false" : "true")
              << " orthogonal=" << (orth ? "false" : "true") << "\n";
    if (compat) {
        std::cout << "witness: " << *compat << "\n";
    } else if (orth) {
        std::cout << "witness: " << *orth << "\n";
    }
    return 0;
}

int run_check_objects(const Target& target, const std::string& fibrant,
                      const std::string& cofibrant, bool strong)
{
    const auto poset = resolve(target);
    const auto f = parse_objects(*poset, fibrant);
    const auto c = parse_objects(*poset, cofibrant);
    const bool exists =
        strong ? exists_strong_ms_with_objects(poset, f, c) : exists_ms_with_objects(poset, f, c);
    std::cout << "exists=" << (exists ? "true" : "false") << "\n";
    return 0;
}

int run_check_construct(const Target& target, const std::string& method,
                        const std::string& pair_file, const std::string& out_path)
{
    const auto poset = resolve(target);
    const auto p = read_pair(poset, pair_file);
    const auto catalog = enumerate_brackets(poset, enumeration_options(1));
    const auto result = construct(construction_from_name(method), p, &catalog);
    auto doc = new_document(*poset);
    add_model_structures(doc, {result.ms}, nullptr);
    auto j = census_json(doc);
    j["meta"].erase("timing");
    j["construction"] = construction_name(result.provenance);
    const auto text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text(out_path, text);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Census of model structures and factorization systems on finite posets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    Target target;
    unsigned jobs = 1;
    Output out;
    bool orthogonal_only = false;
    bool topologies_only = false;
    std::string kind;

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate fs, ms, moore or pairs");
    enumerate->add_option("kind", kind, "fs | ms | moore | pairs")
        ->required()
        ->check(CLI::IsMember({"fs", "ms", "moore", "pairs"}));
    add_target(enumerate, target);
    enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    enumerate->add_option("--out", out.path, "Write the census here");
    enumerate->add_option("--format", out.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_flag("--orthogonal-only", orthogonal_only, "Only orthogonal pairs");
    enumerate->add_flag("--topologies-only", topologies_only,
                        "Only pairs whose two families are topologies");

    std::string from;
    std::string dot_path;
    std::string census_path;
    auto* quiver = app.add_subcommand("quiver", "Export the Bousfield quiver as DOT");
    add_target(quiver, target);
    quiver->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    quiver->add_option("--from", from, "Read an existing census instead of enumerating");
    quiver->add_option("--out", dot_path, "DOT output (default standard output)");
    quiver->add_option("--census", census_path, "Also write the census JSON");

    auto* check = app.add_subcommand("check", "Check pairs, object sets or constructions");
    check->require_subcommand(1);
    std::string pair_file;
    std::string fibrant;
    std::string cofibrant;
    bool strong = false;
    std::string method = "main";
    std::string construct_out;

    auto* check_pair = check->add_subcommand("pair", "Compatibility and orthogonality");
    add_target(check_pair, target);
    check_pair->add_option("--pair", pair_file, "JSON with tables F and C")->required();

    auto* check_objects =
        check->add_subcommand("objects", "Is there a model structure with these objects?");
    add_target(check_objects, target);
    check_objects->add_option("--fibrant", fibrant, "ALL, NONE or comma separated indices")
        ->required();
    check_objects->add_option("--cofibrant", cofibrant, "ALL, NONE or comma separated indices")
        ->required();
    check_objects->add_flag("--strong", strong, "Require a strong model structure");

    auto* check_construct = check->add_subcommand("construct", "Run a construction and verify it");
    add_target(check_construct, target);
    check_construct->add_option("--method", method, "dz | stanculescu | main | strong")
        ->check(CLI::IsMember({"dz", "stanculescu", "main", "strong"}));
    check_construct->add_option("--pair", pair_file, "JSON with tables F and C")->required();
    check_construct->add_option("--out", construct_out, "Output path (default standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enumerate) {
            return run_enumerate(kind, target, jobs, out, orthogonal_only, topologies_only);
        }
        if (*quiver) {
            return run_quiver(target, jobs, from, dot_path, census_path);
        }
        if (*check_pair) {
            return run_check_pair(target, pair_file);
        }
        if (*check_objects) {
            return run_check_objects(target, fibrant, cofibrant, strong);
        }
        return run_check_construct(target, method, pair_file, construct_out);
    } catch (const argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const unsupported_structure_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
