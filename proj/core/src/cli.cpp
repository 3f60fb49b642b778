#include "propcat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "propcat/envelope.hpp"
#include "propcat/error.hpp"
#include "propcat/slcc.hpp"

namespace propcat {

namespace {

constexpr std::size_t kNoBound = std::numeric_limits<std::size_t>::max();

std::size_t parse_count(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw StructureError(what + " must be a number, got '" + text + "'");
    }
    return static_cast<std::size_t>(std::stoull(text));
}

// Properad configs are token lists: a family name followed by key=value
// settings ("terminal k=2", "weighted table=FILE"), or the one-token
// shorthands "zmod=K" and "natcap=N".
std::shared_ptr<const Properad> make_properad(const std::vector<std::string>& spec) {
    if (spec.empty()) throw StructureError("properad config is empty");
    std::string family = spec[0];
    std::vector<std::string> settings(spec.begin() + 1, spec.end());
    if (auto eq = family.find('='); eq != std::string::npos) {
        settings.insert(settings.begin(), "k" + family.substr(eq));
        family = family.substr(0, eq);
    }
    auto setting = [&](const std::string& key) -> std::string {
        for (const std::string& t : settings) {
            auto eq = t.find('=');
            if (eq != std::string::npos && t.compare(0, eq, key) == 0) {
                return t.substr(eq + 1);
            }
        }
        throw StructureError("properad config '" + family + "' needs " + key + "=<value>");
    };
    if (family == "terminal") return terminal_properad(parse_count(setting("k"), "k"));
    if (family == "discrete") return discrete_properad(parse_count(setting("k"), "k"));
    if (family == "zmod") return weighted_properad(cyclic_table(parse_count(setting("k"), "k")));
    if (family == "natcap") {
        return weighted_properad(saturating_table(parse_count(setting("k"), "k")));
    }
    if (family == "weighted") {
        const std::string path = setting("table");
        std::ifstream in(path);
        if (!in) throw StructureError("cannot open monoid table file '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return weighted_properad(parse_monoid_table(text.str()));
    }
    throw StructureError("unknown properad family '" + family +
                         "' (expected terminal, discrete, weighted, zmod, or natcap)");
}

// A word is a whitespace-separated list of colors, possibly empty.
Word parse_word(const std::string& text, std::size_t n_colors) {
    Word out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::size_t c = parse_count(tok, "color");
        if (c < 1 || c > n_colors) {
            throw StructureError("color " + tok + " outside the palette 1.." +
                                 std::to_string(n_colors));
        }
        out.push_back(c);
    }
    return out;
}

std::string graph_witness(const LevelGraph& g) {
    std::ostringstream o;
    o << "levels";
    for (std::size_t s : g.level_sizes()) o << ' ' << s;
    return o.str();
}

void fail_witness(ReportLine& line, const LevelGraph& g, std::size_t i, std::size_t j) {
    if (!line.pass) return;
    line.pass = false;
    line.witness = graph_witness(g) + " at i=" + std::to_string(i) + " j=" + std::to_string(j);
}

// The simplicial identities on bare level graphs: faces compose levels
// away, degeneracies insert identity levels, and the usual relations
// between them hold on the nose.
Report simplicial_report(std::size_t height, std::size_t size) {
    ReportLine ff{true, "face-face", ""};
    ReportLine dd{true, "degeneracy-degeneracy", ""};
    ReportLine mix{true, "face-degeneracy-interchange", ""};
    ReportLine fid{true, "face-degeneracy-identity", ""};
    constexpr std::size_t kGraphCap = 200;

    for (std::size_t h = 1; h <= height; ++h) {
        // Tall stacks narrow the middle bound to keep the graph list small.
        const std::vector<LevelGraph> graphs = all_graphs(h, size, h >= 3 ? 1 : size);
        const std::size_t stride =
            std::max<std::size_t>(1, (graphs.size() + kGraphCap - 1) / kGraphCap);
        for (std::size_t gi = 0; gi < graphs.size(); gi += stride) {
            const LevelGraph& g = graphs[gi];
            if (ff.pass && h >= 2) {
                for (std::size_t j = 1; j <= h && ff.pass; ++j) {
                    for (std::size_t i = 0; i < j && ff.pass; ++i) {
                        if (!(face(face(g, j), i) == face(face(g, i), j - 1))) {
                            fail_witness(ff, g, i, j);
                        }
                    }
                }
            }
            if (dd.pass) {
                for (std::size_t j = 0; j <= h && dd.pass; ++j) {
                    for (std::size_t i = 0; i <= j && dd.pass; ++i) {
                        if (!(degeneracy(degeneracy(g, j), i) ==
                              degeneracy(degeneracy(g, i), j + 1))) {
                            fail_witness(dd, g, i, j);
                        }
                    }
                }
            }
            if (mix.pass || fid.pass) {
                for (std::size_t j = 0; j <= h; ++j) {
                    const LevelGraph sj = degeneracy(g, j);
                    for (std::size_t i = 0; i <= h + 1; ++i) {
                        const LevelGraph lhs = face(sj, i);
                        if (i == j || i == j + 1) {
                            if (fid.pass && !(lhs == g)) fail_witness(fid, g, i, j);
                        } else if (mix.pass) {
                            const LevelGraph rhs = i < j
                                                       ? degeneracy(face(g, i), j - 1)
                                                       : degeneracy(face(g, i - 1), j);
                            if (!(lhs == rhs)) fail_witness(mix, g, i, j);
                        }
                    }
                }
            }
        }
    }

    Report rep;
    rep.lines = {ff, dd, mix, fid};
    return rep;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cospans, level graphs, properads, and their envelope categories", "propcat"};
    app.require_subcommand(1);
    int code = 0;

    std::vector<std::string> cfg;
    std::size_t bound = 3;
    std::string first_text, second_text;
    std::string left_word, right_word;
    std::string weight_label;
    bool corrupt = false;
    std::size_t height = 3, size = 2;

    auto add_properad = [&](CLI::App* sub) {
        sub->add_option("--properad", cfg,
                        "properad config: terminal k=N | discrete k=N | weighted table=FILE "
                        "| zmod=K | natcap=N")
            ->required();
    };
    auto add_bound = [&](CLI::App* sub) {
        sub->add_option("--bound", bound, "enumeration bound")->capture_default_str();
    };

    CLI::App* csp_normalize =
        app.add_subcommand("csp-normalize", "Print the normal form of a cospan");
    csp_normalize->add_option("cospan", first_text, "cospan text")->required();
    csp_normalize->callback([&] { out << print_cospan(parse_cospan(first_text)) << '\n'; });

    CLI::App* csp_compose = app.add_subcommand("csp-compose", "Compose two cospans");
    csp_compose->add_option("first", first_text, "cospan text")->required();
    csp_compose->add_option("second", second_text, "cospan text")->required();
    csp_compose->callback([&] {
        out << print_cospan(compose(parse_cospan(first_text), parse_cospan(second_text)))
            << '\n';
    });

    CLI::App* csp_tensor = app.add_subcommand("csp-tensor", "Tensor two cospans");
    csp_tensor->add_option("first", first_text, "cospan text")->required();
    csp_tensor->add_option("second", second_text, "cospan text")->required();
    csp_tensor->callback([&] {
        out << print_cospan(tensor(parse_cospan(first_text), parse_cospan(second_text)))
            << '\n';
    });

    CLI::App* env_compose =
        app.add_subcommand("env-compose", "Compose two envelope morphisms");
    env_compose->add_option("first", first_text, "morphism text")->required();
    env_compose->add_option("second", second_text, "morphism text")->required();
    add_properad(env_compose);
    env_compose->callback([&] {
        auto p = make_properad(cfg);
        Envelope env(p);
        out << print_morphism(
                   env.compose(parse_morphism(first_text, *p), parse_morphism(second_text, *p)))
            << '\n';
    });

    CLI::App* env_tensor = app.add_subcommand("env-tensor", "Tensor two envelope morphisms");
    env_tensor->add_option("first", first_text, "morphism text")->required();
    env_tensor->add_option("second", second_text, "morphism text")->required();
    add_properad(env_tensor);
    env_tensor->callback([&] {
        auto p = make_properad(cfg);
        Envelope env(p);
        out << print_morphism(
                   env.tensor(parse_morphism(first_text, *p), parse_morphism(second_text, *p)))
            << '\n';
    });

    CLI::App* env_symmetry =
        app.add_subcommand("env-symmetry", "Print the symmetry morphism of two words");
    env_symmetry->add_option("--left", left_word, "left word, colors separated by spaces");
    env_symmetry->add_option("--right", right_word, "right word, colors separated by spaces");
    add_properad(env_symmetry);
    env_symmetry->callback([&] {
        auto p = make_properad(cfg);
        Envelope env(p);
        const std::size_t n = p->colors().size();
        out << print_morphism(env.symmetry(parse_word(left_word, n), parse_word(right_word, n)))
            << '\n';
    });

    CLI::App* check = app.add_subcommand(
        "check-axioms", "Check the labelled-cospan category axioms of an envelope");
    add_properad(check);
    add_bound(check);
    check->add_flag("--corrupt", corrupt,
                    "use the deliberately broken compose that drops repeated closed vertices");
    check->callback([&] {
        auto p = make_properad(cfg);
        auto c = corrupt ? corrupt_closed_dedup_slcc(p) : envelope_as_slcc(p);
        Report rep = check_axioms(*c, bound);
        out << rep.to_text();
        code = rep.all_pass() ? 0 : 1;
    });

    CLI::App* roundtrip = app.add_subcommand(
        "roundtrip", "Extract a properad from its envelope and compare with the original");
    add_properad(roundtrip);
    add_bound(roundtrip);
    roundtrip->callback([&] {
        Report rep = roundtrip_check(make_properad(cfg), bound);
        out << rep.to_text();
        code = rep.all_pass() ? 0 : 1;
    });

    CLI::App* simplicial = app.add_subcommand(
        "simplicial", "Check the simplicial identities on enumerated level graphs");
    simplicial->add_option("--height", height, "maximum graph height")->capture_default_str();
    simplicial->add_option("--size", size, "bound on level and middle sizes")
        ->capture_default_str();
    simplicial->callback([&] {
        Report rep = simplicial_report(height, size);
        out << rep.to_text();
        code = rep.all_pass() ? 0 : 1;
    });

    CLI::App* nat = app.add_subcommand(
        "nat-trans",
        "Check naturality of a unary-operation family against the identity maps");
    add_properad(nat);
    add_bound(nat);
    nat->add_option("--weight", weight_label,
                    "label of the unary operation to use at every color (default: identities)");
    nat->callback([&] {
        auto p = make_properad(cfg);
        std::vector<Op> gamma;
        for (Color c : p->colors()) {
            if (weight_label.empty()) {
                gamma.push_back(p->identity(c));
                continue;
            }
            bool found = false;
            for (const Op& op : p->ops({c}, {c}, kNoBound)) {
                if (p->label(op) == weight_label) {
                    gamma.push_back(op);
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw StructureError("no unary operation labelled '" + weight_label +
                                     "' at color " + std::to_string(c));
            }
        }
        PropMap idm = identity_prop_map(p);
        Report rep = check_nat_trans_report(idm, idm, gamma, bound);
        out << rep.to_text();
        code = rep.all_pass() ? 0 : 1;
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int cli_code = app.exit(e, out, err);
        return cli_code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const StructureError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return code;
}

}  // namespace propcat
