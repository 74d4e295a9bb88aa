// Command-line front end for the Brauer tree engine.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "brauer/enumeration.hpp"
#include "brauer/oracle.hpp"
#include "brauer/orbits.hpp"
#include "brauer/presentation.hpp"
#include "brauer/treefile.hpp"
#include "brauer/walk.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw brauer::ParseError("cannot read file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::pair<brauer::BrauerTree, brauer::SpecialSubset> load(const std::string& path) {
    return brauer::parse_tree_file(slurp(path));
}

json dim_json(const brauer::Dim& d) {
    return d.finite ? json(d.value) : json("infinity");
}

json report_json(const brauer::DimensionReport& r) {
    return {{"domdim", dim_json(r.domdim)},
            {"gorenstein", dim_json(r.gorenstein)},
            {"gldim", dim_json(r.gldim)},
            {"higher_auslander", r.higher_auslander}};
}

json invariant_json(const brauer::DerivedInvariant& inv) {
    return {{"n", inv.n}, {"m", inv.m}, {"word", inv.word}};
}

json walk_json(const brauer::GreenWalk& w) {
    return {{"edges", w.edges}, {"from", w.from}};
}

json count_json(const brauer::BigInt& c) {
    if (c <= std::numeric_limits<std::int64_t>::max()) return c.convert_to<std::int64_t>();
    return c.str();
}

json presentation_json(const brauer::QuiverPresentation& q) {
    json arrows = json::array(), zeros = json::array(), eqs = json::array(),
         nils = json::array();
    for (const auto& a : q.arrows)
        arrows.push_back({{"src", a.src}, {"dst", a.dst}, {"via", a.via}});
    for (const auto& z : q.zero_paths) zeros.push_back({z.x, z.y, z.z});
    for (const auto& e : q.cycle_eqs)
        eqs.push_back({{"lhs_cycle", e.lhs_cycle},
                       {"lhs_power", e.lhs_power},
                       {"rhs_cycle", e.rhs_cycle},
                       {"rhs_power", e.rhs_power}});
    for (const auto& n : q.nilpotents)
        nils.push_back({{"cycle", n.cycle}, {"power", n.power}});
    return {{"vertices", q.vertices},
            {"arrows", arrows},
            {"zero_paths", zeros},
            {"cycle_equalities", eqs},
            {"nilpotents", nils}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw brauer::ParseError("bad integer list entry \"" + item + "\"");
        }
    }
    if (out.empty()) throw brauer::ParseError("empty integer list");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brauer tree and gendo-symmetric biserial algebra computations"};
    app.require_subcommand(1);

    std::string file, file2, dot_flag_file, kind = "tree", kupisch_csv, resolve_csv;
    bool dot = false, enlarged = false, list = false, want_dims = false;
    int opt_n = 1, opt_m = 1, opt_d = 2;

    auto* c_validate = app.add_subcommand("validate", "check a tree file");
    c_validate->add_option("file", file)->required();

    auto* c_present = app.add_subcommand("present", "quiver presentation of the algebra");
    c_present->add_option("file", file)->required();
    c_present->add_flag("--dot", dot, "emit DOT instead of the structured document");

    auto* c_cartan = app.add_subcommand("cartan", "Cartan matrix");
    c_cartan->add_option("file", file)->required();

    auto* c_loewy = app.add_subcommand("loewy", "Loewy layers of the projectives");
    c_loewy->add_option("file", file)->required();

    auto* c_walk = app.add_subcommand("walk", "Green's walk");
    c_walk->add_option("file", file)->required();
    c_walk->add_flag("--enlarged", enlarged, "walk of the enlarged tree");

    auto* c_dims = app.add_subcommand("dims", "homological dimensions");
    c_dims->add_option("file", file)->required();

    auto* c_inv = app.add_subcommand("invariant", "derived-equivalence invariant");
    c_inv->add_option("file", file)->required();
    c_inv->add_option("file2", file2);

    auto* c_star = app.add_subcommand("star", "canonical Brauer-star representative");
    c_star->add_option("file", file)->required();

    auto* c_enum = app.add_subcommand("enumerate", "count or list equivalence classes");
    c_enum->add_option("--kind", kind)->check(CLI::IsMember({"naka", "tree"}))->required();
    c_enum->add_option("--n", opt_n)->required();
    c_enum->add_option("--m", opt_m)->required();
    c_enum->add_flag("--list", list, "emit the full catalogue");

    auto* c_oracle = app.add_subcommand("oracle", "brute-force Nakayama computations");
    c_oracle->add_option("--kupisch", kupisch_csv)->required();
    c_oracle->add_flag("--dims", want_dims, "dimension report (default)");
    c_oracle->add_option("--resolve", resolve_csv, "top,len of a uniserial to resolve");

    auto* c_ortho = app.add_subcommand("ortho", "equally spaced ortho-symmetric W on a star");
    c_ortho->add_option("--n", opt_n)->required();
    c_ortho->add_option("--m", opt_m)->required();
    c_ortho->add_option("--d", opt_d)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (c_validate->parsed()) {
            auto [t, w] = load(file);
            if (!brauer::is_special_subset(t, w))
                throw brauer::NotSpecial("W contains a hook label and its syzygy neighbour");
            emit({{"valid", true},
                  {"edges", t.tree.edge_count()},
                  {"vertices", t.tree.vertex_count()},
                  {"W", w.size()},
                  {"exceptional_multiplicity", t.exceptional_multiplicity()}});
        } else if (c_present->parsed()) {
            auto [t, w] = load(file);
            auto q = brauer::gamma_presentation(t, w);
            if (dot)
                std::cout << brauer::to_dot(q);
            else
                emit(presentation_json(q));
        } else if (c_cartan->parsed()) {
            auto [t, w] = load(file);
            auto c = brauer::cartan(t, w);
            emit({{"labels", c.labels}, {"matrix", c.entries}});
        } else if (c_loewy->parsed()) {
            auto [t, w] = load(file);
            json out = json::array();
            for (const auto& d : brauer::loewy(t, w)) {
                if (d.uniserial)
                    out.push_back({{"vertex", d.vertex}, {"uniserial", true}, {"chain", d.chain}});
                else
                    out.push_back({{"vertex", d.vertex},
                                   {"uniserial", false},
                                   {"top", d.top},
                                   {"branch_a", d.branch_a},
                                   {"branch_b", d.branch_b},
                                   {"socle", d.socle}});
            }
            emit(out);
        } else if (c_walk->parsed()) {
            auto [t, w] = load(file);
            emit(walk_json(brauer::green_walk(enlarged ? brauer::enlarge(t, w) : t)));
        } else if (c_dims->parsed()) {
            auto [t, w] = load(file);
            emit(report_json(brauer::dimensions(t, w)));
        } else if (c_inv->parsed()) {
            auto [t, w] = load(file);
            auto inv = brauer::derived_invariant(t, w);
            if (file2.empty()) {
                emit(invariant_json(inv));
            } else {
                auto [t2, w2] = load(file2);
                auto inv2 = brauer::derived_invariant(t2, w2);
                emit({{"first", invariant_json(inv)},
                      {"second", invariant_json(inv2)},
                      {"equal", inv == inv2}});
            }
        } else if (c_star->parsed()) {
            auto [t, w] = load(file);
            auto rep = brauer::star_representative(brauer::derived_invariant(t, w));
            emit(brauer::tree_file_json(rep.star, rep.w));
        } else if (c_enum->parsed()) {
            if (list) {
                auto cat = brauer::catalogue(opt_n, opt_m, kind);
                json entries = json::array();
                for (const auto& e : cat.entries) {
                    json entry = {{"word", e.word},
                                  {"positions", e.positions},
                                  {"domdim", dim_json(e.dims.domdim)},
                                  {"gorenstein", dim_json(e.dims.gorenstein)},
                                  {"gldim", dim_json(e.dims.gldim)}};
                    if (kind == "naka") entry["kupisch"] = e.kupisch.c;
                    entries.push_back(std::move(entry));
                }
                emit({{"kind", kind},
                      {"n", opt_n},
                      {"m", opt_m},
                      {"count", entries.size()},
                      {"entries", entries}});
            } else {
                auto code = kind == "naka" ? brauer::CodeSpec::Binary : brauer::CodeSpec::Special;
                int length = kind == "naka" ? opt_n : 2 * opt_n;
                emit({{"kind", kind},
                      {"n", opt_n},
                      {"m", opt_m},
                      {"count", count_json(brauer::count_classes(code, length))}});
            }
        } else if (c_oracle->parsed()) {
            auto k = brauer::validate_kupisch(parse_int_list(kupisch_csv));
            if (!resolve_csv.empty()) {
                auto tl = parse_int_list(resolve_csv);
                if (tl.size() != 2) throw brauer::ParseError("--resolve wants top,len");
                auto m = brauer::make_uniserial(k, tl[0], tl[1]);
                auto trace_json = [](const brauer::ResolutionTrace& tr) {
                    json terms = json::array(), mids = json::array();
                    for (const auto& u : tr.terms)
                        terms.push_back({{"top", u.top}, {"len", u.len}});
                    for (const auto& u : tr.intermediates)
                        mids.push_back({{"top", u.top}, {"len", u.len}});
                    return json{{"terms", terms},
                                {"intermediates", mids},
                                {"cyclic", tr.cyclic},
                                {"dim", dim_json(tr.dim)}};
                };
                emit({{"kupisch", k.c},
                      {"module", {{"top", m.top}, {"len", m.len}}},
                      {"injective_coresolution", trace_json(brauer::oracle_inj_coresolution(k, m))},
                      {"projective_resolution", trace_json(brauer::oracle_proj_resolution(k, m))}});
            } else {
                emit(report_json(brauer::oracle_dims(k)));
            }
        } else if (c_ortho->parsed()) {
            brauer::BrauerTree probe = brauer::make_star(opt_n, opt_m);
            brauer::HookLabel start = brauer::hook_at(brauer::green_walk(probe), 0);
            auto [star, w] = brauer::construct_ortho(opt_n, opt_m, opt_d, start);
            auto inv = brauer::derived_invariant(star, w);
            emit({{"n", inv.n},
                  {"m", inv.m},
                  {"word", inv.word},
                  {"level", opt_d - 2},
                  {"tree", brauer::tree_file_json(star, w)}});
        }
    } catch (const brauer::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const brauer::BoundExceeded& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const brauer::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
