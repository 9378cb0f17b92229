#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "inckk/compression.hpp"
#include "inckk/inc.hpp"
#include "inckk/io.hpp"

namespace inckk::cli {

namespace {

constexpr uint64_t kDefaultIdentitySeed = 0x1c4b5a93;

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "-" means the fallback stream (stdin in the binary).
std::string slurp(const std::string& path, std::istream& fallback) {
    if (path == "-") return read_stream(fallback);
    std::ifstream file(path);
    if (!file) throw parse_error("cannot open input file '" + path + "'");
    return read_stream(file);
}

Family load_family(const std::string& path, std::istream& fallback) {
    std::istringstream ss(slurp(path, fallback));
    return read_family(ss);
}

json load_json(const std::string& path, std::istream& fallback) {
    std::istringstream ss(slurp(path, fallback));
    return read_json(ss);
}

std::string ordering_name(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return "less";
    if (o == std::strong_ordering::greater) return "greater";
    return "equal";
}

// Compact single-line rendering for family lists in human output.
std::string family_inline(const Family& f) {
    std::string s = "{";
    bool first = true;
    for (const DSet& u : f) {
        if (!first) s += ", ";
        first = false;
        s += "(";
        for (size_t i = 0; i < u.elements().size(); ++i) {
            if (i) s += ",";
            s += std::to_string(u.elements()[static_cast<size_t>(i)]);
        }
        s += ")";
    }
    return s + "}";
}

void emit_json(const json& j, bool compact, std::ostream& out) {
    out << (compact ? j.dump() : j.dump(2)) << "\n";
}

void emit_family(const Family& f, bool json_mode, std::ostream& out) {
    if (json_mode)
        emit_json(family_to_json(f), true, out);
    else
        out << family_to_text(f);
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void print_report_text(const VerificationReport& r, std::ostream& out) {
    out << "universe n=" << r.n << " d=" << r.d << " m=" << r.m << ": checked=" << r.checked
        << " min|Inc|=" << r.minimum << " minimizers=" << r.minimizer_count
        << " violations=" << r.violation_count;
    if (r.violation_count == 0 && !r.minimizers.empty())
        out << " first=" << family_inline(r.minimizers.front());
    out << "\n";
    for (const Family& f : r.violations) out << "  violation: " << family_inline(f) << "\n";
}

struct CommandState {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool json = false;
    int exit_code = 0;
};

void add_inc_commands(CLI::App& app, CommandState& st) {
    CLI::App* inc = app.add_subcommand("inc", "Monoid image operations");
    inc->require_subcommand(1);

    auto image_input = std::make_shared<std::string>("-");
    CLI::App* image = inc->add_subcommand("image", "Image of a family under the monoid");
    image->add_option("-i,--input", *image_input, "family file or - for stdin");
    image->callback([&st, image_input] {
        emit_family(inc_image(load_family(*image_input, st.in)), st.json, st.out);
    });

    auto iter_input = std::make_shared<std::string>("-");
    auto steps = std::make_shared<int>(1);
    CLI::App* iterate = inc->add_subcommand("iterate", "Iterated image of a family");
    iterate->add_option("-i,--input", *iter_input, "family file or - for stdin");
    iterate->add_option("-t,--steps", *steps, "number of applications")->required();
    iterate->callback([&st, iter_input, steps] {
        emit_family(inc_iterate(load_family(*iter_input, st.in), *steps), st.json, st.out);
    });

    auto pi_input = std::make_shared<std::string>("-");
    auto pi_index = std::make_shared<int>(1);
    CLI::App* pi = inc->add_subcommand("pi", "Apply one generator map to a d-set");
    pi->add_option("-i,--input", *pi_input, "d-set file (one line) or - for stdin");
    pi->add_option("--index", *pi_index, "generator index i >= 1")->required();
    pi->callback([&st, pi_input, pi_index] {
        std::istringstream ss(slurp(*pi_input, st.in));
        std::string line;
        if (!std::getline(ss, line)) throw parse_error("d-set: empty input");
        DSet u = apply_pi(*pi_index, parse_dset(line));
        if (st.json)
            emit_json(json(u.elements()), true, st.out);
        else
            st.out << u.to_string() << "\n";
    });

    auto shift_input = std::make_shared<std::string>("-");
    auto shift_index = std::make_shared<int>(2);
    CLI::App* shift = inc->add_subcommand("shift", "Combinatorial shift of a family");
    shift->add_option("-i,--input", *shift_input, "family file or - for stdin");
    shift->add_option("--index", *shift_index, "shift index i > 1")->required();
    shift->callback([&st, shift_input, shift_index] {
        emit_family(comb_shift(*shift_index, load_family(*shift_input, st.in)), st.json, st.out);
    });
}

void add_order_commands(CLI::App& app, CommandState& st) {
    CLI::App* order = app.add_subcommand("order", "Squashed and Borel order queries");
    order->require_subcommand(1);

    auto rank_input = std::make_shared<std::string>("-");
    CLI::App* rk = order->add_subcommand("rank", "Position of a d-set in squashed order");
    rk->add_option("-i,--input", *rank_input, "d-set file (one line) or - for stdin");
    rk->callback([&st, rank_input] {
        std::istringstream ss(slurp(*rank_input, st.in));
        std::string line;
        if (!std::getline(ss, line)) throw parse_error("d-set: empty input");
        uint64_t m = rank(parse_dset(line));
        if (st.json)
            emit_json(json{{"rank", m}}, true, st.out);
        else
            st.out << m << "\n";
    });

    auto un_m = std::make_shared<uint64_t>(1);
    auto un_d = std::make_shared<int>(1);
    CLI::App* un = order->add_subcommand("unrank", "The m-th d-set in squashed order");
    un->add_option("-m,--m", *un_m, "1-based rank")->required();
    un->add_option("-d,--d", *un_d, "cardinality")->required();
    un->callback([&st, un_m, un_d] {
        DSet u = unrank(*un_m, *un_d);
        if (st.json)
            emit_json(json(u.elements()), true, st.out);
        else
            st.out << u.to_string() << "\n";
    });

    auto cmp_input = std::make_shared<std::string>("-");
    CLI::App* cmp = order->add_subcommand("cmp", "Compare two d-sets (two input lines)");
    cmp->add_option("-i,--input", *cmp_input, "file with two d-set lines or - for stdin");
    cmp->callback([&st, cmp_input] {
        std::istringstream ss(slurp(*cmp_input, st.in));
        std::string a, b;
        if (!std::getline(ss, a) || !std::getline(ss, b))
            throw parse_error("expected two d-set lines");
        auto o = squashed_cmp(parse_dset(a), parse_dset(b));
        if (st.json)
            emit_json(json{{"cmp", ordering_name(o)}}, true, st.out);
        else
            st.out << ordering_name(o) << "\n";
    });

    auto borel_input = std::make_shared<std::string>("-");
    CLI::App* bl = order->add_subcommand("borel", "Coordinatewise comparison (two input lines)");
    bl->add_option("-i,--input", *borel_input, "file with two d-set lines or - for stdin");
    bl->callback([&st, borel_input] {
        std::istringstream ss(slurp(*borel_input, st.in));
        std::string a, b;
        if (!std::getline(ss, a) || !std::getline(ss, b))
            throw parse_error("expected two d-set lines");
        bool leq = borel_leq(parse_dset(a), parse_dset(b));
        if (st.json)
            emit_json(json{{"leq", leq}}, true, st.out);
        else
            st.out << (leq ? "true" : "false") << "\n";
    });

    auto fam_lhs = std::make_shared<std::string>();
    auto fam_rhs = std::make_shared<std::string>();
    CLI::App* fc = order->add_subcommand("family-cmp", "Compare two families");
    fc->add_option("lhs", *fam_lhs, "first family file or -")->required();
    fc->add_option("rhs", *fam_rhs, "second family file or -")->required();
    fc->callback([&st, fam_lhs, fam_rhs] {
        auto o = family_squashed_cmp(load_family(*fam_lhs, st.in), load_family(*fam_rhs, st.in));
        if (st.json)
            emit_json(json{{"cmp", ordering_name(o)}}, true, st.out);
        else
            st.out << ordering_name(o) << "\n";
    });

    auto rep_m = std::make_shared<uint64_t>(0);
    auto rep_d = std::make_shared<int>(1);
    CLI::App* rep = order->add_subcommand("rep", "d-binomial representation of m");
    rep->add_option("-m,--m", *rep_m, "nonnegative integer")->required();
    rep->add_option("-d,--d", *rep_d, "cardinality")->required();
    rep->callback([&st, rep_m, rep_d] {
        BinomialRep r = binomial_rep(*rep_m, *rep_d);
        if (st.json) {
            json terms = json::array();
            for (const auto& t : r.terms()) terms.push_back({t.a, t.i});
            emit_json(terms, true, st.out);
        } else {
            if (r.empty()) {
                st.out << "0\n";
                return;
            }
            bool first = true;
            for (const auto& t : r.terms()) {
                if (!first) st.out << " + ";
                first = false;
                st.out << "C(" << t.a << "," << t.i << ")";
            }
            st.out << "\n";
        }
    });
}

void add_family_commands(CLI::App& app, CommandState& st) {
    auto make_family_map = [&st](CLI::App* cmd, auto op) {
        auto input = std::make_shared<std::string>("-");
        cmd->add_option("-i,--input", *input, "family file or - for stdin");
        cmd->callback([&st, input, op] { emit_family(op(load_family(*input, st.in)), st.json, st.out); });
        return cmd;
    };

    auto compress_input = std::make_shared<std::string>("-");
    auto above = std::make_shared<int>(0);
    CLI::App* comp = app.add_subcommand("compress", "Replace a family by its initial segment");
    comp->add_option("-i,--input", *compress_input, "family file or - for stdin");
    comp->add_option("--above", *above, "compress within the elements > k");
    comp->callback([&st, compress_input, above] {
        emit_family(compress_above(load_family(*compress_input, st.in), *above), st.json, st.out);
    });

    CLI::App* partial = app.add_subcommand("partial", "Left or right partial compression");
    partial->require_subcommand(1);
    make_family_map(partial->add_subcommand("left", "Compress slices with fixed smallest element"),
                    [](const Family& f) { return left_compress(f); });
    make_family_map(partial->add_subcommand("right", "Compress slices with fixed largest element"),
                    [](const Family& f) { return right_compress(f); });

    auto fix_input = std::make_shared<std::string>("-");
    auto fix_cap = std::make_shared<uint64_t>(0);
    CLI::App* fix = app.add_subcommand("fixpoint", "Alternate partial compressions to stability");
    fix->add_option("-i,--input", *fix_input, "family file or - for stdin");
    fix->add_option("--cap", *fix_cap, "iteration cap (0 = automatic)");
    fix->callback([&st, fix_input, fix_cap] {
        emit_family(fixpoint(load_family(*fix_input, st.in), *fix_cap), st.json, st.out);
    });

    make_family_map(app.add_subcommand("shadow", "All sets obtained by deleting one element"),
                    [](const Family& f) { return shadow(f); });

    CLI::App* segment = app.add_subcommand("segment", "Initial segment or Borel ideal of a d-set");
    segment->require_subcommand(1);
    auto seg_u = std::make_shared<std::string>();
    CLI::App* seg_init = segment->add_subcommand("initial", "All sets squashed-below u");
    seg_init->add_option("-u,--u", *seg_u, "d-set, e.g. \"1 2 4\"")->required();
    seg_init->callback([&st, seg_u] {
        emit_family(initial_segment(parse_dset(*seg_u)), st.json, st.out);
    });
    auto ideal_u = std::make_shared<std::string>();
    CLI::App* seg_borel = segment->add_subcommand("borel", "All sets coordinatewise below u");
    seg_borel->add_option("-u,--u", *ideal_u, "d-set, e.g. \"2 3\"")->required();
    seg_borel->callback([&st, ideal_u] {
        emit_family(borel_ideal(parse_dset(*ideal_u)), st.json, st.out);
    });

    CLI::App* slice = app.add_subcommand("slice", "Members with a pinned coordinate, stripped");
    slice->require_subcommand(1);
    for (bool first : {true, false}) {
        CLI::App* sub = slice->add_subcommand(first ? "first" : "last",
                                              first ? "Pin the smallest element"
                                                    : "Pin the largest element");
        auto input = std::make_shared<std::string>("-");
        auto k = std::make_shared<int>(1);
        sub->add_option("-i,--input", *input, "family file or - for stdin");
        sub->add_option("-k,--k", *k, "pinned value")->required();
        sub->callback([&st, input, k, first] {
            Family f = load_family(*input, st.in);
            emit_family(first ? slice_first(f, *k) : slice_last(f, *k), st.json, st.out);
        });
    }

    auto pred_input = std::make_shared<std::string>("-");
    CLI::App* pred = app.add_subcommand("predicates", "Structural predicates of a family");
    pred->add_option("-i,--input", *pred_input, "family file or - for stdin");
    pred->callback([&st, pred_input] {
        Family f = load_family(*pred_input, st.in);
        bool comp = is_compressed(f);
        bool shif = is_shifted(f);
        bool left = is_left_compressed(f);
        bool right = is_right_compressed(f);
        if (st.json) {
            emit_json(json{{"compressed", comp},
                           {"shifted", shif},
                           {"left_compressed", left},
                           {"right_compressed", right}},
                      true, st.out);
        } else {
            st.out << "compressed: " << (comp ? "true" : "false") << "\n"
                   << "shifted: " << (shif ? "true" : "false") << "\n"
                   << "left_compressed: " << (left ? "true" : "false") << "\n"
                   << "right_compressed: " << (right ? "true" : "false") << "\n";
        }
    });
}

void add_numeric_commands(CLI::App& app, CommandState& st) {
    CLI::App* numeric = app.add_subcommand("numeric", "Cardinality operators");
    numeric->require_subcommand(1);
    for (bool is_shadow : {true, false}) {
        CLI::App* sub = numeric->add_subcommand(is_shadow ? "shadow" : "inc",
                                                is_shadow
                                                    ? "Minimal shadow size of an m-set family"
                                                    : "Minimal image size of an m-set family");
        auto m = std::make_shared<uint64_t>(0);
        auto d = std::make_shared<int>(1);
        sub->add_option("-m,--m", *m, "family size")->required();
        sub->add_option("-d,--d", *d, "cardinality")->required();
        sub->callback([&st, m, d, is_shadow] {
            uint64_t v = is_shadow ? shadow_num(*m, *d) : inc_num(*m, *d);
            if (st.json)
                emit_json(json{{"value", v}}, true, st.out);
            else
                st.out << v << "\n";
        });
    }
}

void add_fvector_commands(CLI::App& app, CommandState& st) {
    CLI::App* fv = app.add_subcommand("fvector", "Face-count vector queries");
    fv->require_subcommand(1);
    auto input = std::make_shared<std::string>("-");
    CLI::App* check = fv->add_subcommand("check", "Feasibility as the face counts of a complex");
    check->add_option("-i,--input", *input, "JSON array [f0, f1, ...] or - for stdin");
    check->callback([&st, input] {
        FVector f = fvector_from_json(load_json(*input, st.in));
        auto v = kk_violation(f);
        if (st.json) {
            json j{{"feasible", !v.has_value()}};
            if (v) j["d"] = *v;
            emit_json(j, true, st.out);
        } else if (v) {
            st.out << "infeasible: shadow inequality fails at d=" << *v << "\n";
        } else {
            st.out << "feasible\n";
        }
        if (v) st.exit_code = 1;
    });
}

void add_chain_commands(CLI::App& app, CommandState& st) {
    CLI::App* chain = app.add_subcommand("chain", "Chains of face-count vectors and complexes");
    chain->require_subcommand(1);

    auto check_input = std::make_shared<std::string>("-");
    CLI::App* check = chain->add_subcommand("check", "Feasibility of a face-count chain");
    check->add_option("-i,--input", *check_input, "JSON array of vectors or - for stdin");
    check->callback([&st, check_input] {
        FVectorChain c = chain_from_json(load_json(*check_input, st.in));
        auto v = chain_violation(c);
        if (st.json) {
            json j{{"feasible", !v.has_value()}};
            if (v) {
                j["n"] = v->n;
                j["d"] = v->d;
                j["inequality"] = v->which == ChainInequality::shadow ? "shadow" : "growth";
            }
            emit_json(j, true, st.out);
        } else if (v) {
            st.out << "infeasible: "
                   << (v->which == ChainInequality::shadow ? "shadow" : "growth")
                   << " inequality fails at n=" << v->n << ", d=" << v->d << "\n";
        } else {
            st.out << "feasible\n";
        }
        if (v) st.exit_code = 1;
    });

    auto con_input = std::make_shared<std::string>("-");
    CLI::App* construct = chain->add_subcommand("construct",
                                                "Realize a feasible chain by compressed complexes");
    construct->add_option("-i,--input", *con_input, "JSON array of vectors or - for stdin");
    construct->callback([&st, con_input] {
        auto complexes = construct_chain(chain_from_json(load_json(*con_input, st.in)));
        emit_json(complex_chain_to_json(complexes), st.json, st.out);
    });

    auto stab_input = std::make_shared<std::string>("-");
    CLI::App* stab = chain->add_subcommand("stabilize",
                                           "Per-step exactness of an invariant complex chain");
    stab->add_option("-i,--input", *stab_input, "JSON array of complexes or - for stdin");
    stab->callback([&st, stab_input] {
        auto complexes = complex_chain_from_json(load_json(*stab_input, st.in));
        auto flags = stabilization_report(complexes);
        if (st.json) {
            emit_json(json(flags), true, st.out);
        } else {
            for (size_t i = 0; i < flags.size(); ++i)
                st.out << "step " << (i + 1) << ": " << (flags[i] ? "equal" : "proper") << "\n";
        }
    });

    auto inv_input = std::make_shared<std::string>("-");
    CLI::App* inv = chain->add_subcommand("invariant", "Check a complex chain for invariance");
    inv->add_option("-i,--input", *inv_input, "JSON array of complexes or - for stdin");
    inv->callback([&st, inv_input] {
        auto complexes = complex_chain_from_json(load_json(*inv_input, st.in));
        auto v = check_chain(complexes);
        if (st.json) {
            json j{{"invariant", !v.has_value()}};
            if (v) {
                j["n"] = v->n;
                j["face"] = v->face.elements();
            }
            emit_json(j, true, st.out);
        } else if (v) {
            st.out << "not invariant: image of complex " << v->n << " needs face ("
                   << v->face.to_string() << ")\n";
        } else {
            st.out << "invariant\n";
        }
        if (v) st.exit_code = 1;
    });
}

void add_complex_commands(CLI::App& app, CommandState& st) {
    CLI::App* cx = app.add_subcommand("complex", "Simplicial complex operations");
    cx->require_subcommand(1);

    auto val_input = std::make_shared<std::string>("-");
    CLI::App* validate = cx->add_subcommand("validate", "Check closure under inclusion");
    validate->add_option("-i,--input", *val_input, "complex JSON or - for stdin");
    validate->callback([&st, val_input] {
        try {
            complex_from_json(load_json(*val_input, st.in));
            if (st.json)
                emit_json(json{{"valid", true}}, true, st.out);
            else
                st.out << "valid\n";
        } catch (const closure_violation& e) {
            if (st.json)
                emit_json(json{{"valid", false}, {"missing", e.missing_face().elements()}}, true,
                          st.out);
            else
                st.out << e.what() << "\n";
            st.exit_code = 1;
        }
    });

    auto fv_input = std::make_shared<std::string>("-");
    CLI::App* fvec = cx->add_subcommand("fvector", "Face counts by dimension");
    fvec->add_option("-i,--input", *fv_input, "complex JSON or - for stdin");
    fvec->callback([&st, fv_input] {
        FVector f = complex_from_json(load_json(*fv_input, st.in)).f_vector();
        emit_json(fvector_to_json(f), true, st.out);
    });

    for (bool image : {true, false}) {
        CLI::App* sub = cx->add_subcommand(image ? "inc" : "compress",
                                           image ? "Gradewise monoid image"
                                                 : "Gradewise compression");
        auto input = std::make_shared<std::string>("-");
        sub->add_option("-i,--input", *input, "complex JSON or - for stdin");
        sub->callback([&st, input, image] {
            SimplicialComplex dl = complex_from_json(load_json(*input, st.in));
            emit_json(complex_to_json(image ? inc_complex(dl) : compress_complex(dl)), st.json,
                      st.out);
        });
    }

    auto nf_input = std::make_shared<std::string>("-");
    auto nf_n = std::make_shared<int>(1);
    CLI::App* nf = cx->add_subcommand("nonfaces", "Complement of the faces inside [n]");
    nf->add_option("-i,--input", *nf_input, "complex JSON or - for stdin");
    nf->add_option("-n,--n", *nf_n, "ambient vertex count")->required();
    nf->callback([&st, nf_input, nf_n] {
        auto grades = non_faces(complex_from_json(load_json(*nf_input, st.in)), *nf_n);
        json out = json::object();
        for (const auto& [d, fam] : grades) {
            json members = json::array();
            for (const DSet& u : fam) members.push_back(u.elements());
            out[std::to_string(d)] = std::move(members);
        }
        emit_json(json{{"grades", std::move(out)}}, st.json, st.out);
    });
}

void add_verify_commands(CLI::App& app, CommandState& st) {
    CLI::App* verify = app.add_subcommand("verify", "Exhaustive and randomized checks");
    verify->require_subcommand(1);

    {
        CLI::App* main_cmd = verify->add_subcommand("main",
                                                    "Image minimality of compression, exhaustive");
        auto n = std::make_shared<int>(6);
        auto d = std::make_shared<int>(3);
        auto m = std::make_shared<int64_t>(-1);
        auto all_m = std::make_shared<bool>(false);
        auto jobs = std::make_shared<int>(1);
        auto cap = std::make_shared<uint64_t>(8);
        main_cmd->add_option("-n,--n", *n, "ground set size");
        main_cmd->add_option("-d,--d", *d, "cardinality");
        main_cmd->add_option("-m,--m", *m, "family size (default: all sizes)");
        main_cmd->add_flag("--all-m", *all_m, "sweep every family size");
        main_cmd->add_option("-j,--jobs", *jobs, "worker threads (0 = hardware)")
            ->envname("INC_KK_JOBS");
        main_cmd->add_option("--cap", *cap, "witnesses kept per report");
        main_cmd->set_config("--config");
        main_cmd->callback([&st, n, d, m, all_m, jobs, cap] {
            int workers = resolve_jobs(*jobs);
            std::vector<VerificationReport> reports;
            if (*m >= 0 && !*all_m) {
                reports.push_back(
                    verify_min_theorem(*n, *d, static_cast<uint64_t>(*m), workers, *cap));
            } else {
                reports = verify_min_theorem_all_m(*n, *d, workers, *cap);
            }
            uint64_t violations = 0;
            for (const auto& r : reports) violations += r.violation_count;
            if (st.json) {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(report_to_json(r));
                emit_json(reports.size() == 1 ? arr.front() : arr, true, st.out);
            } else {
                for (const auto& r : reports) print_report_text(r, st.out);
                st.out << (violations == 0 ? "verified: no violations\n"
                                           : "VIOLATIONS FOUND\n");
            }
            if (violations > 0) st.exit_code = 1;
        });
    }

    {
        CLI::App* ident = verify->add_subcommand("identities",
                                                 "Slice decompositions on random families");
        auto count = std::make_shared<uint64_t>(10000);
        auto max_elem = std::make_shared<int>(9);
        auto seed = std::make_shared<uint64_t>(kDefaultIdentitySeed);
        ident->add_option("--count", *count, "number of random families");
        ident->add_option("--max-elem", *max_elem, "largest element allowed");
        ident->add_option("--seed", *seed, "RNG seed");
        ident->set_config("--config");
        ident->callback([&st, count, max_elem, seed] {
            std::mt19937_64 rng(*seed);
            uint64_t failures = 0;
            for (uint64_t trial = 0; trial < *count; ++trial) {
                int d = 2 + static_cast<int>(trial % 3);
                uint64_t limit = std::min<uint64_t>(
                    8, binom_checked(static_cast<uint64_t>(*max_elem),
                                     static_cast<uint64_t>(d)));
                std::uniform_int_distribution<uint64_t> size_pick(0, limit);
                Family f = random_family(rng, *max_elem, d, size_pick(rng));
                if (!verify_identities(f)) ++failures;
            }
            if (st.json)
                emit_json(json{{"checked", *count}, {"failures", failures}}, true, st.out);
            else
                st.out << "checked " << *count << " families, failures " << failures << "\n";
            if (failures > 0) st.exit_code = 1;
        });
    }

    {
        CLI::App* seg = verify->add_subcommand("segments",
                                               "Image of segments and ideals under the unit shift");
        auto max_elem = std::make_shared<int>(8);
        auto max_d = std::make_shared<int>(4);
        seg->add_option("--max-elem", *max_elem, "largest element of the top set");
        seg->add_option("--max-d", *max_d, "largest cardinality");
        seg->set_config("--config");
        seg->callback([&st, max_elem, max_d] {
            SegmentReport r = verify_segment_lemmas(*max_elem, *max_d);
            if (st.json) {
                emit_json(segment_report_to_json(r), true, st.out);
            } else {
                st.out << "checked " << r.checked << " sets, violations "
                       << r.violations.size() << "\n";
            }
            if (!r.violations.empty()) st.exit_code = 1;
        });
    }
}

void add_search_commands(CLI::App& app, CommandState& st) {
    CLI::App* search = app.add_subcommand("search", "Witness searches");
    search->require_subcommand(1);

    {
        CLI::App* shift = search->add_subcommand(
            "shift-noninclusion", "Family where shifting and the image do not commute");
        auto n = std::make_shared<int>(6);
        auto d = std::make_shared<int>(2);
        auto max_m = std::make_shared<uint64_t>(4);
        shift->add_option("-n,--n", *n, "ground set size");
        shift->add_option("-d,--d", *d, "cardinality");
        shift->add_option("--max-m", *max_m, "largest family size");
        shift->set_config("--config");
        shift->callback([&st, n, d, max_m] {
            auto witness = search_shift_noninclusion(*n, *d, *max_m);
            if (st.json) {
                json j{{"found", witness.has_value()}};
                if (witness) {
                    j["family"] = family_to_json(witness->family);
                    j["i"] = witness->i;
                }
                emit_json(j, true, st.out);
            } else if (witness) {
                st.out << "witness: i=" << witness->i << " family "
                       << family_inline(witness->family) << "\n";
            } else {
                st.out << "no witness in the searched universe\n";
            }
            if (!witness) st.exit_code = 1;
        });
    }

    {
        CLI::App* eq = search->add_subcommand("equality",
                                              "Families whose image attains the numeric bound");
        auto n = std::make_shared<int>(5);
        auto d = std::make_shared<int>(2);
        auto m = std::make_shared<uint64_t>(2);
        auto jobs = std::make_shared<int>(1);
        eq->add_option("-n,--n", *n, "ground set size")->required();
        eq->add_option("-d,--d", *d, "cardinality")->required();
        eq->add_option("-m,--m", *m, "family size")->required();
        eq->add_option("-j,--jobs", *jobs, "worker threads (0 = hardware)")
            ->envname("INC_KK_JOBS");
        eq->callback([&st, n, d, m, jobs] {
            auto cases = equality_cases(*n, *d, *m, resolve_jobs(*jobs));
            if (st.json) {
                json arr = json::array();
                for (const Family& f : cases) arr.push_back(family_to_json(f));
                emit_json(arr, true, st.out);
            } else {
                st.out << cases.size() << " families attain inc_num(" << *m << "," << *d
                       << ") = " << inc_num(*m, *d) << "\n";
                for (const Family& f : cases) st.out << "  " << family_inline(f) << "\n";
            }
        });
    }
}

void add_enum_command(CLI::App& app, CommandState& st) {
    CLI::App* en = app.add_subcommand("enum", "Stream every size-m family inside [n]");
    auto n = std::make_shared<int>(4);
    auto d = std::make_shared<int>(2);
    auto m = std::make_shared<uint64_t>(1);
    en->add_option("-n,--n", *n, "ground set size")->required();
    en->add_option("-d,--d", *d, "cardinality")->required();
    en->add_option("-m,--m", *m, "family size")->required();
    en->callback([&st, n, d, m] {
        FamilyEnumerator stream(*n, *d, *m);
        if (st.json) {
            json arr = json::array();
            while (auto f = stream.next()) arr.push_back(family_to_json(*f));
            emit_json(arr, true, st.out);
        } else {
            while (auto f = stream.next()) st.out << family_inline(*f) << "\n";
        }
    });
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CommandState st{in, out, err};
    CLI::App app{"Exact set-family combinatorics: squashed order, compressions, monoid images"};
    app.set_help_all_flag("--help-all", "Print help for every subcommand");
    app.require_subcommand(1);
    app.add_flag("--json", st.json, "machine-readable output");

    add_inc_commands(app, st);
    add_order_commands(app, st);
    add_family_commands(app, st);
    add_numeric_commands(app, st);
    add_fvector_commands(app, st);
    add_chain_commands(app, st);
    add_complex_commands(app, st);
    add_verify_commands(app, st);
    add_search_commands(app, st);
    add_enum_command(app, st);

    // Let --json written after a subcommand reach the root flag.
    auto enable_fallthrough = [](CLI::App* node, auto&& self) -> void {
        for (CLI::App* sub : node->get_subcommands({})) {
            sub->fallthrough();
            self(sub, self);
        }
    };
    enable_fallthrough(&app, enable_fallthrough);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return st.exit_code;
}

}  // namespace inckk::cli
