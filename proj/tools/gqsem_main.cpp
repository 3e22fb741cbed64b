// Command-line surface: model ingestion, sentence evaluation across
// backends and readings, law checking, reading comparison, AST dumps, and
// quantifier tables. Output is deterministic byte-for-byte for fixed inputs;
// exit codes signal operational errors only, never truth values.

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gqsem/evaluator.hpp"
#include "gqsem/model_io.hpp"

using nlohmann::json;

namespace {

using namespace gqsem;

struct OutputOptions {
    std::string format = "text";
};

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Reading reading_from_name(const std::string& name) {
    if (name == "subject-wide") return Reading::SubjectWide;
    if (name == "object-wide") return Reading::ObjectWide;
    if (name == "branching") return Reading::Branching;
    throw CLI::ValidationError("--readings",
                               "unknown reading '" + name +
                                   "' (subject-wide, object-wide, branching)");
}

Backend backend_from_name(const std::string& name) {
    if (name == "oracle") return Backend::Oracle;
    if (name == "categorical") return Backend::Categorical;
    if (name == "vector") return Backend::Vector;
    throw CLI::ValidationError("--backends", "unknown backend '" + name +
                                                 "' (oracle, categorical, vector)");
}

std::string truth_text(bool b) { return b ? "true" : "false"; }

json witness_to_json(const Witness& w) {
    json out;
    if (w.scope_set) out["scope_set"] = w.scope_set->names();
    if (w.branching_pair) {
        out["x"] = w.branching_pair->first.names();
        out["y"] = w.branching_pair->second.names();
    }
    return out;
}

std::string witness_text(const Witness& w) {
    if (w.scope_set) return "scope=" + w.scope_set->to_string();
    if (w.branching_pair) {
        return "x=" + w.branching_pair->first.to_string() +
               " y=" + w.branching_pair->second.to_string();
    }
    return "-";
}

int cmd_eval(const std::string& model_path, const std::string& sentence,
             const std::string& readings_csv, const std::string& backends_csv,
             const OutputOptions& out_opts) {
    const Model model = load_model(model_path);
    const SentenceAst ast = parse(tokenize(sentence), model.lexicon);

    std::vector<Reading> readings;
    if (readings_csv.empty()) {
        readings = std::holds_alternative<TransitiveAst>(ast)
                       ? std::vector<Reading>{Reading::SubjectWide, Reading::ObjectWide}
                       : std::vector<Reading>{Reading::SubjectWide};
    } else {
        for (const auto& name : split_csv(readings_csv)) {
            readings.push_back(reading_from_name(name));
        }
    }
    std::vector<Backend> backends;
    if (backends_csv.empty()) {
        backends = {Backend::Oracle, Backend::Categorical};
    } else {
        for (const auto& name : split_csv(backends_csv)) {
            backends.push_back(backend_from_name(name));
        }
    }

    const EvalReport report = evaluate(model, sentence, readings, backends);

    if (out_opts.format == "json") {
        json j;
        j["sentence"] = sentence;
        j["results"] = json::array();
        for (const auto& [r, b, res] : report.results) {
            json row;
            row["reading"] = reading_name(r);
            row["backend"] = backend_name(b);
            row["truth"] = res.truth;
            if (res.scalar) row["scalar"] = *res.scalar;
            if (res.witness) row["witness"] = witness_to_json(*res.witness);
            j["results"].push_back(row);
        }
        j["notes"] = report.notes;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "sentence: " << render(report.ast) << "\n";
    for (const auto& [r, b, res] : report.results) {
        std::ostringstream line;
        line << std::left << std::setw(13) << reading_name(r) << std::setw(13)
             << backend_name(b) << std::setw(7) << truth_text(res.truth);
        line << std::setw(8) << (res.scalar ? std::to_string(*res.scalar) : "-");
        line << (res.witness ? witness_text(*res.witness) : "-");
        std::cout << line.str() << "\n";
    }
    for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
    return 0;
}

bool all_determiners_conservative(const Model& m, const TransitiveAst& ast) {
    const Universe& u = *m.universe;
    return is_conservative(m.determiner(ast.d1), u, u.size()) &&
           is_conservative(m.determiner(ast.d2), u, u.size());
}

int cmd_compare(const std::string& model_path, const std::string& sentence,
                const OutputOptions& out_opts) {
    const Model model = load_model(model_path);
    const SentenceAst ast = parse(tokenize(sentence), model.lexicon);
    const auto* trans = std::get_if<TransitiveAst>(&ast);
    if (!trans) {
        throw ShapeMismatchError("compare needs a transitive sentence");
    }

    DetCache cache;
    const std::vector<Backend> backends = {Backend::Oracle, Backend::Categorical,
                                           Backend::Vector};
    const EvalReport report =
        evaluate(model, sentence, {Reading::SubjectWide, Reading::ObjectWide}, backends,
                 {}, &cache);

    std::string branching_note;
    std::vector<std::tuple<Backend, CaseResult>> branching_rows;
    try {
        const BranchingResult br = branching_barwise(model, *trans);
        CaseResult oracle_row;
        oracle_row.truth = br.truth;
        if (br.witness) {
            Witness w;
            w.branching_pair = br.witness;
            oracle_row.witness = w;
        }
        branching_rows.emplace_back(Backend::Oracle, oracle_row);
        CaseResult cat_row;
        cat_row.truth = branching_diagram(model, *trans, {}, &cache);
        branching_rows.emplace_back(Backend::Categorical, cat_row);
        CaseResult vec_row;
        const std::int64_t s = branching_vector(model, *trans, {}, &cache);
        vec_row.truth = s > 0;
        vec_row.scalar = s;
        branching_rows.emplace_back(Backend::Vector, vec_row);
    } catch (const MixedMonotonicityError& e) {
        branching_note = e.what();
    }

    // Per-reading backend agreement is the theorem contract for conservative
    // determiners; surface a violation loudly instead of printing past it.
    auto backends_disagree = [&](Reading r) {
        const CaseResult* base = report.find(r, Backend::Oracle);
        for (Backend b : backends) {
            const CaseResult* res = report.find(r, b);
            if (res && base && res->truth != base->truth) return true;
        }
        return false;
    };
    bool branching_disagrees = false;
    for (std::size_t i = 1; i < branching_rows.size(); ++i) {
        if (std::get<1>(branching_rows[i]).truth !=
            std::get<1>(branching_rows[0]).truth) {
            branching_disagrees = true;
        }
    }
    const bool linear_disagrees =
        backends_disagree(Reading::SubjectWide) || backends_disagree(Reading::ObjectWide);

    const bool sw = report.find(Reading::SubjectWide, Backend::Oracle)->truth;
    const bool ow = report.find(Reading::ObjectWide, Backend::Oracle)->truth;

    if (out_opts.format == "json") {
        json j;
        j["sentence"] = sentence;
        j["results"] = json::array();
        for (const auto& [r, b, res] : report.results) {
            json row;
            row["reading"] = reading_name(r);
            row["backend"] = backend_name(b);
            row["truth"] = res.truth;
            if (res.scalar) row["scalar"] = *res.scalar;
            j["results"].push_back(row);
        }
        for (const auto& [b, res] : branching_rows) {
            json row;
            row["reading"] = reading_name(Reading::Branching);
            row["backend"] = backend_name(b);
            row["truth"] = res.truth;
            if (res.scalar) row["scalar"] = *res.scalar;
            if (res.witness) row["witness"] = witness_to_json(*res.witness);
            j["results"].push_back(row);
        }
        if (!branching_note.empty()) j["branching_skipped"] = branching_note;
        j["readings_agree"] = (sw == ow);
        j["notes"] = report.notes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "sentence: " << render(ast) << "\n";
        for (const auto& [r, b, res] : report.results) {
            std::cout << std::left << std::setw(13) << reading_name(r) << std::setw(13)
                      << backend_name(b) << std::setw(7) << truth_text(res.truth)
                      << (res.scalar ? std::to_string(*res.scalar) : "-") << "\n";
        }
        for (const auto& [b, res] : branching_rows) {
            std::cout << std::left << std::setw(13) << reading_name(Reading::Branching)
                      << std::setw(13) << backend_name(b) << std::setw(7)
                      << truth_text(res.truth)
                      << (res.scalar ? std::to_string(*res.scalar) : "-")
                      << (res.witness ? "  " + witness_text(*res.witness) : "") << "\n";
        }
        if (!branching_note.empty()) {
            std::cout << "branching    skipped: " << branching_note << "\n";
        }
        std::cout << "summary: readings " << (sw == ow ? "AGREE" : "DIFFER") << "\n";
    }

    if (linear_disagrees || branching_disagrees) {
        if (all_determiners_conservative(model, *trans)) {
            std::cerr << "error: backends disagree on a conservative-determiner "
                         "sentence; this is a contract violation\n";
            return static_cast<int>(ErrorCode::Internal);
        }
        std::cout << "note: backends diverge; a non-conservative table quantifier is "
                     "involved, and the categorical backend evaluates its "
                     "conservativization\n";
    }
    return 0;
}

int cmd_check_laws(const std::string& model_path, int size, const OutputOptions& out_opts) {
    std::shared_ptr<const Universe> universe;
    if (!model_path.empty()) {
        universe = load_model(model_path).universe;
    } else {
        std::vector<std::string> names;
        for (int i = 0; i < size; ++i) names.push_back("e" + std::to_string(i));
        universe = std::make_shared<Universe>(names);
    }
    const Universe& u = *universe;

    const BialgebraLawReport rel = check_bialgebra_laws(u);
    const SnakeLawReport rel_snakes = check_snake_equations(u);
    const bool vect_ok = u.size() <= kDefaultVectorLawCap;
    VectLawReport vect;
    if (vect_ok) vect = check_vect_laws(u);

    struct Row {
        const char* instantiation;
        const char* law;
        int state; // 0 fail, 1 pass, 2 skip
    };
    auto state_of = [](bool b) { return b ? 1 : 0; };
    const std::vector<Row> rows = {
        {"rel", "counit-mult", state_of(rel.counit_mult)},
        {"rel", "comult-unit", state_of(rel.comult_unit)},
        {"rel", "interchange", state_of(rel.interchange)},
        {"rel", "unit-counit", state_of(rel.unit_counit)},
        {"rel", "snake-left", state_of(rel_snakes.left)},
        {"rel", "snake-right", state_of(rel_snakes.right)},
        {"vect", "counit-mult", vect_ok ? state_of(vect.bialgebra.counit_mult) : 2},
        {"vect", "comult-unit", vect_ok ? state_of(vect.bialgebra.comult_unit) : 2},
        {"vect", "interchange", vect_ok ? state_of(vect.bialgebra.interchange) : 2},
        {"vect", "unit-counit", vect_ok ? state_of(vect.bialgebra.unit_counit) : 2},
        {"vect", "snake-left", vect_ok ? state_of(vect.snakes.left) : 2},
        {"vect", "snake-right", vect_ok ? state_of(vect.snakes.right) : 2},
    };

    if (out_opts.format == "json") {
        json j;
        j["universe_size"] = u.size();
        j["laws"] = json::array();
        for (const auto& row : rows) {
            json r;
            r["instantiation"] = row.instantiation;
            r["law"] = row.law;
            r["result"] = row.state == 1 ? "pass" : (row.state == 0 ? "fail" : "skip");
            j["laws"].push_back(r);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "universe size: " << u.size() << "\n";
        for (const auto& row : rows) {
            std::cout << std::left << std::setw(5) << row.instantiation << std::setw(13)
                      << row.law
                      << (row.state == 1 ? "PASS"
                                         : (row.state == 0 ? "FAIL" : "SKIP (size cap 3)"))
                      << "\n";
        }
    }
    for (const auto& row : rows) {
        if (row.state == 0) return static_cast<int>(ErrorCode::Internal);
    }
    return 0;
}

int cmd_parse(const std::string& model_path, const std::string& sentence,
              const OutputOptions& out_opts) {
    const Model model = load_model(model_path);
    const SentenceAst ast = parse(tokenize(sentence), model.lexicon);
    if (out_opts.format == "json") {
        json j;
        if (const auto* t = std::get_if<TransitiveAst>(&ast)) {
            j["shape"] = "transitive";
            j["d1"] = t->d1;
            j["n1"] = t->n1;
            j["v"] = t->v;
            j["d2"] = t->d2;
            j["n2"] = t->n2;
        } else {
            const auto& i = std::get<IntransitiveAst>(ast);
            j["shape"] = "intransitive";
            j["d"] = i.d;
            j["n"] = i.n;
            j["vp"] = i.vp;
        }
        std::cout << j.dump(2) << "\n";
    } else if (const auto* t = std::get_if<TransitiveAst>(&ast)) {
        std::cout << "shape: transitive\n"
                  << "d1: " << t->d1 << "\nn1: " << t->n1 << "\nv: " << t->v
                  << "\nd2: " << t->d2 << "\nn2: " << t->n2 << "\n";
    } else {
        const auto& i = std::get<IntransitiveAst>(ast);
        std::cout << "shape: intransitive\n"
                  << "d: " << i.d << "\nn: " << i.n << "\nvp: " << i.vp << "\n";
    }
    return 0;
}

int cmd_table(const std::string& model_path, const std::string& quantifier,
              const OutputOptions& out_opts) {
    const Model model = load_model(model_path);
    auto it = model.quantifiers.find(quantifier);
    if (it == model.quantifiers.end()) {
        throw UnknownNameError("unknown quantifier '" + quantifier + "'");
    }
    const auto table = as_table(it->second, *model.universe);
    if (out_opts.format == "json") {
        json j;
        j["quantifier"] = quantifier;
        j["pairs"] = json::array();
        for (const auto& [a, x] : table) {
            json row;
            row["restrictor"] = a.names();
            row["scope"] = x.names();
            j["pairs"].push_back(row);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "quantifier '" << quantifier << "': " << table.size()
                  << " pairs over " << model.universe->size() << " entities\n";
        for (const auto& [a, x] : table) {
            std::cout << a.to_string() << " -> " << x.to_string() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model engine for generalised quantifier semantics"};
    app.require_subcommand(1);

    OutputOptions out_opts;
    app.add_option("--format", out_opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string model_path, sentence, readings_csv, backends_csv, quantifier;
    int size = -1;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a sentence against a model");
    eval_cmd->add_option("model", model_path, "model file")->required();
    eval_cmd->add_option("sentence", sentence, "sentence text")->required();
    eval_cmd->add_option("--readings", readings_csv,
                         "comma list: subject-wide,object-wide,branching");
    eval_cmd->add_option("--backends", backends_csv,
                         "comma list: oracle,categorical,vector");

    auto* compare_cmd =
        app.add_subcommand("compare", "compare scope readings across all backends");
    compare_cmd->add_option("model", model_path, "model file")->required();
    compare_cmd->add_option("sentence", sentence, "sentence text")->required();

    auto* laws_cmd =
        app.add_subcommand("check-laws", "verify the structural equations");
    laws_cmd->add_option("model", model_path, "model file (universe size source)");
    laws_cmd->add_option("--size", size, "fresh universe of this size");

    auto* parse_cmd = app.add_subcommand("parse", "dump the sentence AST");
    parse_cmd->add_option("model", model_path, "model file")->required();
    parse_cmd->add_option("sentence", sentence, "sentence text")->required();

    auto* table_cmd =
        app.add_subcommand("table", "dump a quantifier's powerset relation");
    table_cmd->add_option("model", model_path, "model file")->required();
    table_cmd->add_option("quantifier", quantifier, "quantifier name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (eval_cmd->parsed()) {
            return cmd_eval(model_path, sentence, readings_csv, backends_csv, out_opts);
        }
        if (compare_cmd->parsed()) return cmd_compare(model_path, sentence, out_opts);
        if (laws_cmd->parsed()) {
            if (model_path.empty() && size < 0) {
                std::cerr << "error: check-laws needs a model file or --size\n";
                return 2;
            }
            return cmd_check_laws(model_path, size, out_opts);
        }
        if (parse_cmd->parsed()) return cmd_parse(model_path, sentence, out_opts);
        if (table_cmd->parsed()) return cmd_table(model_path, quantifier, out_opts);
    } catch (const gqsem::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(gqsem::ErrorCode::Internal);
    }
    return 0;
}
