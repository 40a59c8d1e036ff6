#include "cli.hpp"

#include "acceptance.hpp"
#include "poramsey/errors.hpp"
#include "poramsey/grid.hpp"
#include "poramsey/interp.hpp"
#include "poramsey/io.hpp"
#include "poramsey/linext.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>

namespace poramsey::cli {

using io::Json;

SearchLimits RunConfig::limits() const
{
    SearchLimits l;
    l.max_colorings = max_colorings;
    l.max_ground_size = max_ground_size;
    l.jobs = jobs;
    return l;
}

namespace
{
    BigInt parse_big(const std::string & text)
    {
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("expected a non-negative integer, got \"" + text + "\"");
        return BigInt(text);
    }

    int parse_positive(const char * name, const std::string & text)
    {
        try {
            std::size_t used = 0;
            int v = std::stoi(text, &used);
            if (used == text.size() && v > 0)
                return v;
        }
        catch (const std::exception &) {
        }
        throw InputError(std::string(name) + " must be a positive integer");
    }
}

RunConfig config_from_environment()
{
    RunConfig c;
    if (const char * v = std::getenv("PORAMSEY_MAX_COLORINGS"))
        c.max_colorings = parse_big(v);
    if (const char * v = std::getenv("PORAMSEY_MAX_GROUND_SIZE"))
        c.max_ground_size = parse_positive("PORAMSEY_MAX_GROUND_SIZE", v);
    if (const char * v = std::getenv("PORAMSEY_JOBS"))
        c.jobs = parse_positive("PORAMSEY_JOBS", v);
    return c;
}

namespace
{
    struct Context {
        RunConfig config;
        std::string max_colorings_text;
        std::ostream & out;
    };

    void add_common(CLI::App * sub, Context & ctx)
    {
        sub->add_option("--max-colorings", ctx.max_colorings_text, "ceiling on d^objects for exhaustive search");
        sub->add_option("--max-ground-size", ctx.config.max_ground_size, "ceiling on structure sizes")->check(CLI::PositiveNumber);
        sub->add_option("--jobs", ctx.config.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", ctx.config.seed, "seed for randomized checks");
        sub->add_option("--format", ctx.config.format, "json | table | dot")->check(CLI::IsMember({"json", "table", "dot"}));
    }

    void emit(Context & ctx, const Json & j, const std::function<void(std::ostream &)> & table = {})
    {
        if (ctx.config.format == "table" && table)
            table(ctx.out);
        else
            ctx.out << j.dump(2) << "\n";
    }

    void print_certificate(std::ostream & out, const ColoringCertificate & c)
    {
        out << "verdict   " << to_string(c.verdict) << "\n"
            << "colors    " << c.colors << "\n"
            << "objects   " << c.objects << "\n"
            << "targets   " << c.targets << "\n";
        if (c.coloring) {
            out << "coloring  ";
            for (int v : *c.coloring)
                out << v;
            out << "\n";
        }
    }

    std::string join(const std::vector<int> & v, const char * sep = " ")
    {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? sep : "") + std::to_string(v[i]);
        return s;
    }

    AnchoredSequence anchor_or_trivial(const std::string & text, int ambient, int p = 1)
    {
        if (! text.empty())
            return io::parse_anchor(text, ambient);
        return AnchoredSequence(std::vector<int>(static_cast<std::size_t>(p), 0), ambient);
    }
}

int dispatch(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
    Context ctx{config_from_environment(), "", out};
    CLI::App app{"Ramsey constructions for finite posets with linear extensions", "poramsey"};
    app.require_subcommand(1);
    std::function<int()> action;

    // Options shared by several subcommands.
    std::string x_path, y_path, z_path, input_path;
    int d = 2, n = 0, m = 1, k = 0, l = 0, bound = 6, m_max = 4, n_max = 12, order_index = 0;
    int from = 0, to = 0, a_size = 1, b_size = 1, p = 1;
    std::string anchors, i_anchor, a_anchor, b_anchor;
    bool count_only = false, transfer = false;

    auto sub = [&](const char * name, const char * help) {
        auto * s = app.add_subcommand(name, help);
        add_common(s, ctx);
        return s;
    };

    {
        auto * s = sub("validate", "check a structure file");
        s->add_option("--input", input_path, "structure JSON")->required();
        s->callback([&] {
            action = [&] {
                const auto raw = io::raw_structure_from_json(io::read_file(input_path));
                try {
                    const auto st = Structure::validate(raw);
                    if (ctx.config.format == "dot") {
                        out << io::to_dot(st);
                        return 0;
                    }
                    Json j;
                    j["ok"] = true;
                    j["structure"] = io::to_json(st);
                    emit(ctx, j, [&](std::ostream & o) { o << "ok: size " << st.size() << ", " << st.partial_order().pair_count() << " pairs, p = " << st.p() << "\n"; });
                    return 0;
                }
                catch (const InvalidStructure & e) {
                    Json j;
                    j["ok"] = false;
                    j["error"] = to_string(e.kind());
                    j["detail"] = e.what();
                    emit(ctx, j, [&](std::ostream & o) { o << "invalid: " << e.what() << "\n"; });
                    return static_cast<int>(usage);
                }
            };
        });
    }
    {
        auto * s = sub("extensions", "the ordered space lin_L(P) of a structure");
        s->add_option("--input", input_path, "structure JSON")->required();
        s->add_option("--of-order", order_index, "index k of the reference order L_k")->check(CLI::NonNegativeNumber);
        s->callback([&] {
            action = [&] {
                const auto st = io::load_structure(input_path);
                if (order_index >= st.p())
                    throw InputError("--of-order must be below p");
                const auto space = extension_space(st, order_index);
                Json j;
                j["reference"] = io::to_json(space.reference());
                Json members = Json::array();
                for (const auto & mem : space.members())
                    members.push_back(io::to_json(mem));
                j["members"] = members;
                emit(ctx, j, [&](std::ostream & o) {
                    for (int i = 0; i < space.size(); ++i)
                        o << std::setw(4) << i << "  " << join(space.member(i).enumeration()) << "\n";
                });
                return 0;
            };
        });
    }
    {
        auto * s = sub("rigid-surjections", "list or count (B, b / A, a)_rs");
        s->add_option("--from", from, "|B|")->required()->check(CLI::PositiveNumber);
        s->add_option("--to", to, "|A|")->required()->check(CLI::PositiveNumber);
        s->add_option("--anchors", anchors, "b_0,...:a_0,... (default 0:0)");
        s->add_flag("--count", count_only, "print the count only");
        s->callback([&] {
            action = [&] {
                std::string src = "0", tgt = "0";
                if (! anchors.empty()) {
                    auto colon = anchors.find(':');
                    if (colon == std::string::npos)
                        throw InputError("--anchors must look like b_0,...:a_0,...");
                    src = anchors.substr(0, colon);
                    tgt = anchors.substr(colon + 1);
                }
                const auto b = io::parse_anchor(src, from);
                const auto a = io::parse_anchor(tgt, to);
                if (a.p() != b.p())
                    throw InputError("anchors must have the same length");
                const auto count = count_rs(b, a);
                if (count_only) {
                    Json j;
                    j["count"] = count.str();
                    emit(ctx, j, [&](std::ostream & o) { o << count << "\n"; });
                    return 0;
                }
                const auto all = enumerate_rs(b, a);
                Json list = Json::array();
                for (const auto & r : all)
                    list.push_back(io::to_json(r));
                Json j;
                j["count"] = count.str();
                j["maps"] = list;
                emit(ctx, j, [&](std::ostream & o) {
                    for (const auto & r : all)
                        o << join(r.map()) << "\n";
                });
                return 0;
            };
        });
    }
    {
        auto * s = sub("copies", "copies of X in Z");
        s->add_option("--x", x_path)->required();
        s->add_option("--z", z_path)->required();
        s->callback([&] {
            action = [&] {
                const auto x = io::load_structure(x_path);
                const auto z = io::load_structure(z_path);
                const auto copies = enumerate_copies(x, z);
                Json list = Json::array();
                for (const auto & c : copies)
                    list.push_back(c.elements);
                Json j;
                j["count"] = copies.size();
                j["embeddings"] = enumerate_embeddings(x, z).size();
                j["copies"] = list;
                emit(ctx, j, [&](std::ostream & o) {
                    for (const auto & c : copies)
                        o << join(c.elements) << "\n";
                });
                return 0;
            };
        });
    }
    {
        auto * s = sub("verify-witness", "is Z a Ramsey witness for (X, Y, d)?");
        s->add_option("--z", z_path)->required();
        s->add_option("--x", x_path)->required();
        s->add_option("--y", y_path)->required();
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                const auto cert = verify_ramsey_witness(io::load_structure(z_path), io::load_structure(x_path), io::load_structure(y_path), d,
                    ctx.config.limits());
                emit(ctx, io::to_json(cert), [&](std::ostream & o) { print_certificate(o, cert); });
                return 0;
            };
        });
    }
    {
        auto * s = sub("construct-witness", "build the grid witness for (X, Y, d)");
        s->add_option("--x", x_path)->required();
        s->add_option("--y", y_path)->required();
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->add_option("--m-max", m_max)->check(CLI::PositiveNumber);
        s->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                ConstructOptions options{m_max, n_max, ctx.config.limits()};
                const auto r = construct_witness(io::load_structure(x_path), io::load_structure(y_path), d, options);
                if (ctx.config.format == "dot" && r.grid) {
                    out << io::to_dot(r.grid->structure(), "grid");
                    return 0;
                }
                emit(ctx, io::to_json(r), [&](std::ostream & o) {
                    o << (r.verified() ? "verified" : "symbolic") << "\n";
                    if (r.params)
                        o << "m " << r.params->m << ", n " << (r.params->n ? std::to_string(*r.params->n) : "?") << ", anchor " << join(r.params->anchor.elements())
                          << ", colors " << r.params->color_count << "\n";
                    if (r.grid)
                        o << "grid " << r.grid->n() << "^" << r.grid->m() << " = " << r.grid->size() << " points\n";
                    if (! r.note.empty())
                        o << "note: " << r.note << "\n";
                });
                return 0;
            };
        });
    }
    {
        auto * s = sub("search-minimal", "smallest structure that is a witness for (X, Y, d)");
        s->add_option("--x", x_path)->required();
        s->add_option("--y", y_path)->required();
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->add_option("--bound", bound)->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                const auto r = minimal_witness_search(io::load_structure(x_path), io::load_structure(y_path), d, bound, ctx.config.limits());
                Json j;
                j["size"] = r.z.size();
                j["structure"] = io::to_json(r.z);
                j["certificate"] = io::to_json(r.certificate);
                j["candidates"] = r.candidates;
                emit(ctx, j, [&](std::ostream & o) { o << "size " << r.z.size() << " after " << r.candidates << " candidates\n"; });
                return 0;
            };
        });
    }
    {
        auto * s = sub("search-product", "least n for the product statement");
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
        s->add_option("--l", l)->required()->check(CLI::NonNegativeNumber);
        s->add_option("--m", m)->required()->check(CLI::PositiveNumber);
        s->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                const auto r = search_product(d, k, l, m, n_max, ctx.config.limits());
                Json j;
                j["n"] = r.n;
                j["certificate"] = io::to_json(r.certificate);
                j["below"] = r.below ? io::to_json(*r.below) : Json(nullptr);
                emit(ctx, j, [&](std::ostream & o) { o << "n = " << r.n << "\n"; });
                return 0;
            };
        });
    }
    {
        auto * s = sub("verify-product", "check the product statement at n");
        s->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
        s->add_option("--l", l)->required()->check(CLI::NonNegativeNumber);
        s->add_option("--m", m)->required()->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                const auto cert = verify_product_witness(n, d, k, l, m, ctx.config.limits());
                emit(ctx, io::to_json(cert), [&](std::ostream & o) { print_certificate(o, cert); });
                return 0;
            };
        });
    }
    {
        auto * s = sub("search-dual", "least m and anchor for the dual statement with constants");
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->add_option("--a-size", a_size)->required()->check(CLI::PositiveNumber);
        s->add_option("--b-size", b_size)->required()->check(CLI::PositiveNumber);
        s->add_option("--a-anchor", a_anchor, "a_0,... (default 0)");
        s->add_option("--b-anchor", b_anchor, "b_0,... (default 0)");
        s->add_option("--m-max", m_max)->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                const auto a = anchor_or_trivial(a_anchor, a_size);
                const auto b = anchor_or_trivial(b_anchor, b_size, a.p());
                const auto w = search_dual(d, a, b, m_max, ctx.config.limits());
                emit(ctx, io::to_json(w), [&](std::ostream & o) { o << "m = " << w.m << ", anchor " << join(w.anchor.elements()) << "\n"; });
                return 0;
            };
        });
    }
    {
        auto * s = sub("verify-dual", "check the dual statement with constants at (m, i)");
        s->add_option("--m", m)->required()->check(CLI::PositiveNumber);
        s->add_option("--i-anchor", i_anchor, "i_0,... (default 0)");
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->add_option("--a-size", a_size)->required()->check(CLI::PositiveNumber);
        s->add_option("--b-size", b_size)->required()->check(CLI::PositiveNumber);
        s->add_option("--a-anchor", a_anchor);
        s->add_option("--b-anchor", b_anchor);
        s->callback([&] {
            action = [&] {
                const auto i = anchor_or_trivial(i_anchor, m);
                const auto a = anchor_or_trivial(a_anchor, a_size, i.p());
                const auto b = anchor_or_trivial(b_anchor, b_size, i.p());
                const auto cert = verify_dual_witness(i, d, a, b, ctx.config.limits());
                emit(ctx, io::to_json(cert), [&](std::ostream & o) { print_certificate(o, cert); });
                return 0;
            };
        });
    }
    {
        auto * s = sub("verify-prop2", "product with rigid surjections at (m, n, i)");
        s->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
        s->add_option("--m", m)->required()->check(CLI::PositiveNumber);
        s->add_option("--i-anchor", i_anchor);
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
        s->add_option("--l", l)->required()->check(CLI::NonNegativeNumber);
        s->add_option("--a-size", a_size)->required()->check(CLI::PositiveNumber);
        s->add_option("--b-size", b_size)->required()->check(CLI::PositiveNumber);
        s->add_option("--a-anchor", a_anchor);
        s->add_option("--b-anchor", b_anchor);
        s->callback([&] {
            action = [&] {
                const auto i = anchor_or_trivial(i_anchor, m);
                WitnessParams params{.m = m, .n = n, .anchor = i};
                const auto cert = verify_prop2_witness(params, d, anchor_or_trivial(a_anchor, a_size, i.p()), anchor_or_trivial(b_anchor, b_size, i.p()), k, l,
                    ctx.config.limits());
                emit(ctx, io::to_json(cert), [&](std::ostream & o) { print_certificate(o, cert); });
                return 0;
            };
        });
    }
    {
        auto * s = sub("verify-prop5", "twisted product statement for A = lin(P^X), B = lin(P^Y)");
        s->add_option("--x", x_path)->required();
        s->add_option("--y", y_path)->required();
        s->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
        s->add_option("--m", m)->required()->check(CLI::PositiveNumber);
        s->add_option("--i-anchor", i_anchor);
        s->add_option("--d", d)->required()->check(CLI::PositiveNumber);
        s->callback([&] {
            action = [&] {
                const auto x = ExtensionFrame::of(io::load_structure(x_path));
                const auto y = ExtensionFrame::of(io::load_structure(y_path));
                const auto i = anchor_or_trivial(i_anchor, m, x.structure.p());
                WitnessParams params{.m = m, .n = n, .anchor = i};
                const auto cert = verify_prop5_witness(params, d, AnchoredOrderSet::from_space(x.space, x.anchor),
                    AnchoredOrderSet::from_space(y.space, y.anchor), ctx.config.limits());
                emit(ctx, io::to_json(cert), [&](std::ostream & o) { print_certificate(o, cert); });
                return 0;
            };
        });
    }
    {
        auto * s = sub("grid", "the structure n^m with <_pr and the <_lx,i orders");
        s->add_option("--n", n)->required()->check(CLI::PositiveNumber);
        s->add_option("--m", m)->required()->check(CLI::PositiveNumber);
        s->add_option("--anchors", anchors, "i_0,... (default p zeros)");
        s->add_option("--p", p)->check(CLI::PositiveNumber);
        s->callback([&, s] {
            action = [&, s] {
                const auto i = anchor_or_trivial(anchors, m, p);
                if (! anchors.empty() && s->count("--p") && i.p() != p)
                    throw InputError("--anchors must have p entries");
                const GridStructure g(n, m, i, ctx.config.max_ground_size);
                if (ctx.config.format == "dot") {
                    out << io::to_dot(g.structure(), "grid");
                    return 0;
                }
                emit(ctx, io::to_json(g), [&](std::ostream & o) {
                    for (std::size_t j = 0; j < g.anchor().elements().size(); ++j) {
                        o << "lx," << g.anchor()[static_cast<int>(j)] << ":";
                        for (int idx : g.structure().order(static_cast<int>(j)).enumeration())
                            o << " " << join(g.coordinates(idx), "");
                        o << "\n";
                    }
                });
                return 0;
            };
        });
    }
    {
        auto * s = sub("interpret-check", "check the interpretation of (Y choose X) in the twisted-product family");
        s->add_option("--x", x_path)->required();
        s->add_option("--y", y_path)->required();
        s->add_option("--m", m)->required()->check(CLI::PositiveNumber);
        s->add_option("--n", n)->required()->check(CLI::PositiveNumber);
        s->add_option("--i-anchor", i_anchor);
        s->add_option("--d", d)->check(CLI::PositiveNumber);
        s->add_flag("--transfer", transfer, "also run the coloring transfer for d colors");
        s->callback([&] {
            action = [&] {
                const auto frame = InterpFrame::make(io::load_structure(x_path), io::load_structure(y_path));
                const TwistMember f{n, anchor_or_trivial(i_anchor, m, frame.x.structure.p())};
                const auto limits = ctx.config.limits();
                const auto report = check_interpretation(frame, f, alpha, limits);
                const auto identity = check_alpha_identity(frame, f, alpha, limits);
                Json j = io::to_json(report);
                j["identity"] = ! identity.has_value();
                if (transfer) {
                    const auto t = verify_transfer(frame, f, d, limits);
                    j["transfer"] = t.holds() ? "pass" : "fail";
                    j["transfer_colorings"] = t.colorings;
                }
                emit(ctx, j, [&](std::ostream & o) {
                    o << "interpretation " << (report.holds() ? "pass" : "violation") << " (" << report.pairs << " pairs)\n"
                      << "identity " << (identity ? "fail" : "pass") << "\n";
                });
                return 0;
            };
        });
    }
    {
        auto * s = sub("acceptance", "run the acceptance matrix");
        s->callback([&, s] {
            action = [&, s] {
                acceptance::Options options;
                options.limits = ctx.config.limits();
                const bool as_json = s->count("--format") > 0 && ctx.config.format == "json";
                bool all = true;
                Json rows = Json::array();
                acceptance::run_all(options, [&](const acceptance::CriterionResult & r) {
                    all = all && r.passed;
                    if (as_json) {
                        Json row;
                        row["criterion"] = r.id;
                        row["name"] = r.name;
                        row["passed"] = r.passed;
                        row["detail"] = r.detail;
                        row["seconds"] = r.seconds;
                        rows.push_back(row);
                    }
                    else
                        out << acceptance::format_line(r) << "\n" << std::flush;
                });
                if (as_json)
                    out << rows.dump(2) << "\n";
                return all ? 0 : static_cast<int>(usage);
            };
        });
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(usage);
    }

    try {
        if (! ctx.max_colorings_text.empty())
            ctx.config.max_colorings = parse_big(ctx.max_colorings_text);
        return action();
    }
    catch (const InfeasibleError & e) {
        err << "infeasible: " << e.what() << "\n";
        return infeasible;
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    catch (const std::out_of_range & e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    catch (const std::exception & e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }
}

} // namespace poramsey::cli
