#include "sea/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <memory>
#include <ostream>

#include "sea/analysis.hpp"
#include "sea/audit.hpp"
#include "sea/finite_model.hpp"
#include "sea/model_io.hpp"
#include "sea/models.hpp"
#include "sea/product_search.hpp"
#include "sea/report_io.hpp"
#include "sea/sequential.hpp"

namespace sea {

namespace {

struct CommonOpts {
    std::string model = "boolean";
    std::string file;
    int k = 2;
    int n0 = 2;
    std::int64_t window = -1; // -1 = model default
    std::string format = "text";

    bool machine() const { return format == "machine"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    auto* model = cmd->add_option("--model", opts.model,
                                  "builtin model: boolean, scale, hs, e0")
                      ->check(CLI::IsMember({"boolean", "scale", "hs", "e0"}));
    cmd->add_option("--file", opts.file, "finite model file")->excludes(model);
    cmd->add_option("--k", opts.k, "boolean model: size of the base set");
    cmd->add_option("--n0", opts.n0, "e0 model: wrap parameter (>= 2)");
    cmd->add_option("--window", opts.window,
                    "window bound (e0: max first index; scale/hs: max denominator)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
}

std::unique_ptr<AlgebraModel> build_model(const CommonOpts& opts) {
    if (!opts.file.empty()) return load_finite(opts.file);
    if (opts.model == "boolean") return make_boolean(opts.k);
    if (opts.model == "scale") return make_scale();
    if (opts.model == "hs") return make_horizontal_sum();
    return make_e0(opts.n0);
}

std::int64_t effective_bound(const AlgebraModel& model, const CommonOpts& opts) {
    return opts.window >= 0 ? opts.window : model.default_window_bound();
}

ElementRef parse_or_throw(const AlgebraModel& model, const std::string& text,
                          const std::string& flag, std::size_t position) {
    auto e = model.parse_element(text);
    if (!e)
        throw ModelError("bad element syntax '" + text + "' at " + flag + " argument " +
                         std::to_string(position) + " for model " + model.name() +
                         " (expected: " + model.element_syntax() + ")");
    return *e;
}

ElementSet parse_set(const AlgebraModel& model, const std::vector<std::string>& texts,
                     const std::string& flag) {
    ElementSet out;
    for (std::size_t i = 0; i < texts.size(); ++i)
        out.insert(parse_or_throw(model, texts[i], flag, i + 1));
    return out;
}

// machine reports carry the same fixed keys for every command; wall
// time stays out of them so reruns are byte-identical
OrderedJson machine_skeleton(const std::string& command, const AlgebraModel& model,
                             const std::string& window_descriptor) {
    OrderedJson doc;
    doc["command"] = command;
    doc["model"] = model.name();
    doc["window"] = window_descriptor;
    doc["violations"] = OrderedJson::array();
    doc["cases"] = OrderedJson::array();
    doc["closure"] = nullptr;
    doc["timing"] = OrderedJson{{"checked_tuples", 0}};
    return doc;
}

void emit_machine(std::ostream& out, const OrderedJson& doc) { out << doc.dump(2) << "\n"; }

void print_violations_text(std::ostream& out, const AlgebraModel& model,
                           const std::vector<Violation>& violations) {
    for (const auto& v : violations) {
        out << "  " << v.axiom << "  witness=(";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            if (i) out << ", ";
            out << model.label(v.witness[i]);
        }
        out << ")  lhs=" << v.lhs << "  rhs=" << v.rhs << "\n";
    }
}

struct Elapsed {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

int cmd_check(const CommonOpts& opts, std::ostream& out) {
    Elapsed timer;
    auto model = build_model(opts);
    std::int64_t bound = effective_bound(*model, opts);
    auto window = model->window(bound);
    std::string desc = model->window_descriptor(bound);
    AuditReport report = audit_full(*model, window, desc);

    if (opts.machine()) {
        OrderedJson doc = machine_skeleton("check", *model, desc);
        doc["violations"] = violations_to_json(*model, report.violations);
        doc["timing"]["checked_tuples"] = report.checked_tuples;
        emit_machine(out, doc);
    } else {
        out << "model: " << model->name() << "\n";
        out << "window: " << desc << "\n";
        out << "axioms: EA1-EA4" << (model->has_product() ? ", SEA1-SEA5" : "") << "\n";
        out << "violations: " << report.violations.size() << " (" << report.checked_tuples
            << " tuples checked)\n";
        print_violations_text(out, *model, report.violations);
        out << "elapsed: " << timer.ms() << " ms\n";
    }
    return report.clean() ? 0 : 1;
}

int cmd_closure(const CommonOpts& opts, const std::vector<std::string>& gen_texts,
                const ClosureLimits& limits, std::ostream& out) {
    Elapsed timer;
    auto model = build_model(opts);
    ElementSet gens = parse_set(*model, gen_texts, "--gen");
    ClosureResult closure = generate_sub_sea(*model, gens, limits);

    if (opts.machine()) {
        OrderedJson doc = machine_skeleton("closure", *model, "not applicable");
        doc["closure"] = closure_to_json(*model, closure);
        doc["timing"]["checked_tuples"] = closure.iterations;
        emit_machine(out, doc);
    } else {
        out << "model: " << model->name() << "\n";
        out << "generators: " << gens.size() << "\n";
        out << "levels:";
        for (const auto& level : closure.levels) out << " " << level.size();
        out << "\n";
        out << "fixpoint: " << (closure.reached_fixpoint ? "yes" : "no")
            << "  size_limit_hit: " << (closure.size_limit_hit ? "yes" : "no")
            << "  iterations: " << closure.iterations << "\n";
        out << "elements (" << closure.elements.size() << "):";
        std::size_t shown = 0;
        for (const auto& e : closure.elements) {
            if (shown++ == 128) {
                out << " ...";
                break;
            }
            out << " " << model->label(e);
        }
        out << "\n";
        out << "elapsed: " << timer.ms() << " ms\n";
    }
    return 0;
}

int cmd_sharp(const CommonOpts& opts, const std::string& element, std::ostream& out) {
    Elapsed timer;
    auto model = build_model(opts);
    std::int64_t bound = effective_bound(*model, opts);
    std::vector<ElementRef> targets;
    std::string desc;
    if (!element.empty()) {
        targets.push_back(parse_or_throw(*model, element, "--element", 1));
        desc = "single element";
    } else {
        targets = model->window(bound);
        desc = model->window_descriptor(bound);
    }

    std::vector<Violation> disagreements;
    OrderedJson rows = OrderedJson::array();
    std::uint64_t checked = 0;
    std::string text_rows;
    for (const auto& x : targets) {
        ++checked;
        bool idem = is_sharp(*model, x);
        std::string meet = "n/a";
        if (model->is_finite()) {
            switch (sharp_via_meet(*model, x)) {
            case MeetSharpness::Sharp: meet = "sharp"; break;
            case MeetSharpness::NotSharp: meet = "not-sharp"; break;
            case MeetSharpness::NoMeet: meet = "no-meet"; break;
            }
            bool meet_known = meet != "no-meet";
            if (meet_known && (meet == "sharp") != idem)
                disagreements.push_back({"SHARP-MEET", {x},
                                         idem ? "idempotent" : "not idempotent",
                                         meet == "sharp" ? "meet is zero" : "meet is nonzero"});
        }
        OrderedJson row;
        row["element"] = model->label(x);
        row["is_sharp"] = idem;
        row["meet"] = meet;
        rows.push_back(std::move(row));
        text_rows += "  " + model->label(x) + "  sharp=" + (idem ? "yes" : "no") +
                     (meet == "n/a" ? "" : "  meet=" + meet) + "\n";
    }

    if (opts.machine()) {
        OrderedJson doc = machine_skeleton("sharp", *model, desc);
        doc["violations"] = violations_to_json(*model, disagreements);
        doc["sharp"] = std::move(rows);
        doc["timing"]["checked_tuples"] = checked;
        emit_machine(out, doc);
    } else {
        out << "model: " << model->name() << "\n";
        out << "window: " << desc << "\n";
        out << text_rows;
        out << "meet disagreements: " << disagreements.size() << "\n";
        print_violations_text(out, *model, disagreements);
        out << "elapsed: " << timer.ms() << " ms\n";
    }
    return disagreements.empty() ? 0 : 1;
}

int cmd_commutant(const CommonOpts& opts, const std::vector<std::string>& of_texts,
                  std::ostream& out) {
    Elapsed timer;
    auto model = build_model(opts);
    std::int64_t bound = effective_bound(*model, opts);
    auto window = model->window(bound);
    std::string desc = model->window_descriptor(bound);
    ElementSet of = parse_set(*model, of_texts, "--of");
    ElementSet result = commutant(*model, of, window);

    if (opts.machine()) {
        OrderedJson doc = machine_skeleton("commutant", *model, desc);
        OrderedJson elems = OrderedJson::array();
        for (const auto& e : result) elems.push_back(model->label(e));
        doc["commutant"] = std::move(elems);
        doc["timing"]["checked_tuples"] = std::uint64_t(window.size()) * of.size();
        emit_machine(out, doc);
    } else {
        out << "model: " << model->name() << "\n";
        out << "window: " << desc << "\n";
        out << "commutant (" << result.size() << "):";
        for (const auto& e : result) out << " " << model->label(e);
        out << "\n";
        out << "elapsed: " << timer.ms() << " ms\n";
    }
    return 0;
}

int cmd_uniqueness(const CommonOpts& opts, std::uint32_t n, std::ostream& out) {
    Elapsed timer;
    auto model = build_model(opts);
    std::int64_t bound = effective_bound(*model, opts);
    auto window = model->window(bound);
    std::string desc = model->window_descriptor(bound);
    auto cases = uniqueness_search(*model, n, window);
    auto bad = inconsistent_cases(cases);

    if (opts.machine()) {
        OrderedJson doc = machine_skeleton("uniqueness", *model, desc);
        doc["cases"] = cases_to_json(*model, cases);
        doc["timing"]["checked_tuples"] = std::uint64_t(window.size()) * window.size();
        emit_machine(out, doc);
    } else {
        out << "model: " << model->name() << "\n";
        out << "window: " << desc << "  n=" << n << "\n";
        out << "cases: " << cases.size() << "  inconsistent: " << bad.size() << "\n";
        for (const auto& c : cases) {
            out << "  a=" << model->label(c.a) << "  b=" << model->label(c.b)
                << "  c=" << model->label(c.c) << "  sharp=" << (c.c_sharp ? "yes" : "no")
                << "  commute=" << (c.a_commutes_b ? "yes" : "no")
                << "  equal=" << (c.a_equals_b ? "yes" : "no")
                << (c.inconsistent() ? "  INCONSISTENT" : "") << "\n";
        }
        out << "elapsed: " << timer.ms() << " ms\n";
    }
    return bad.empty() ? 0 : 1;
}

int cmd_enum_products(const CommonOpts& opts, std::size_t max_solutions, std::ostream& out) {
    Elapsed timer;
    auto model = build_model(opts);
    auto tables = enumerate_products(*model, max_solutions);
    auto carrier = model->carrier();
    const std::size_t size = carrier.size();

    if (opts.machine()) {
        OrderedJson doc = machine_skeleton("enum-products", *model,
                                           "full carrier (" + std::to_string(size) +
                                               " elements)");
        OrderedJson carrier_labels = OrderedJson::array();
        for (const auto& e : carrier) carrier_labels.push_back(model->label(e));
        doc["carrier"] = std::move(carrier_labels);
        OrderedJson products = OrderedJson::array();
        for (const auto& t : tables) {
            OrderedJson cells = OrderedJson::array();
            for (auto v : t.cells) cells.push_back(model->label(carrier[v]));
            products.push_back(std::move(cells));
        }
        doc["products"] = std::move(products);
        doc["timing"]["checked_tuples"] = tables.size();
        emit_machine(out, doc);
    } else {
        out << "model: " << model->name() << "\n";
        out << "products found: " << tables.size() << "\n";
        for (std::size_t t = 0; t < tables.size(); ++t) {
            out << "# product " << t + 1 << "\n";
            out << "circ:\n";
            for (std::size_t l = 0; l < size; ++l)
                for (std::size_t r = 0; r < size; ++r)
                    out << "  " << model->label(carrier[l]) << ", " << model->label(carrier[r])
                        << ", " << model->label(carrier[tables[t].cells[l * size + r]]) << "\n";
        }
        out << "elapsed: " << timer.ms() << " ms\n";
    }
    return 0;
}

int cmd_describe(const CommonOpts& opts, std::ostream& out) {
    auto model = build_model(opts);
    std::int64_t bound = effective_bound(*model, opts);

    if (opts.machine()) {
        OrderedJson doc = machine_skeleton("describe", *model,
                                           model->is_finite()
                                               ? "full carrier (" +
                                                     std::to_string(model->carrier_size()) +
                                                     " elements)"
                                               : model->window_descriptor(bound));
        doc["finite"] = model->is_finite();
        doc["has_product"] = model->has_product();
        doc["zero"] = model->label(model->zero());
        doc["one"] = model->label(model->one());
        OrderedJson elems = OrderedJson::array();
        for (const auto& e : model->window(bound)) elems.push_back(model->label(e));
        doc["elements"] = std::move(elems);
        emit_machine(out, doc);
    } else {
        out << "model: " << model->name() << "\n";
        out << "backend: " << (model->is_finite() ? "finite" : "symbolic") << "\n";
        out << "product: " << (model->has_product() ? "yes" : "no") << "\n";
        out << "zero: " << model->label(model->zero()) << "  one: "
            << model->label(model->one()) << "\n";
        auto win = model->window(bound);
        out << (model->is_finite() ? "carrier" : "window") << " (" << win.size() << "):";
        std::size_t shown = 0;
        for (const auto& e : win) {
            if (shown++ == 128) {
                out << " ...";
                break;
            }
            out << " " << model->label(e);
        }
        out << "\n";
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"sequential effect algebra workbench"};
    app.name("seatool");
    app.require_subcommand(1);

    CommonOpts opts;

    auto* check = app.add_subcommand("check", "audit the axioms over a window");
    add_common(check, opts);

    auto* closure = app.add_subcommand("closure", "generated subalgebra of a set");
    add_common(closure, opts);
    std::vector<std::string> gens;
    closure->add_option("--gen", gens, "generator element (repeatable)")->required();
    ClosureLimits limits;
    closure->add_option("--max-iterations", limits.max_iterations, "closure iteration cap");
    closure->add_option("--max-size", limits.max_size, "closure size cap");

    auto* sharp = app.add_subcommand("sharp", "sharpness of elements");
    add_common(sharp, opts);
    std::string element;
    sharp->add_option("--element", element, "single element (default: whole window)");

    auto* comm = app.add_subcommand("commutant", "window elements commuting with a set");
    add_common(comm, opts);
    std::vector<std::string> of;
    comm->add_option("--of", of, "set member (repeatable)")->required();

    auto* uniq = app.add_subcommand("uniqueness", "search n.a = n.b = c cases");
    add_common(uniq, opts);
    std::uint32_t n = 2;
    uniq->add_option("--n", n, "multiple (>= 2)")->required()->check(CLI::Range(2u, 1000000u));

    auto* enumprod = app.add_subcommand("enum-products", "all sequential products on a finite sum table");
    add_common(enumprod, opts);
    std::size_t max_solutions = 100;
    enumprod->add_option("--max-solutions", max_solutions, "stop after this many products");

    auto* describe = app.add_subcommand("describe", "model summary");
    add_common(describe, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(opts, out);
        if (closure->parsed()) return cmd_closure(opts, gens, limits, out);
        if (sharp->parsed()) return cmd_sharp(opts, element, out);
        if (comm->parsed()) return cmd_commutant(opts, of, out);
        if (uniq->parsed()) return cmd_uniqueness(opts, n, out);
        if (enumprod->parsed()) return cmd_enum_products(opts, max_solutions, out);
        if (describe->parsed()) return cmd_describe(opts, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "model file error: " << e.what() << "\n";
        return 2;
    } catch (const ModelError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ArithmeticOverflow& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace sea
