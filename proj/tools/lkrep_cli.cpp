// Command-line front end: Krammer matrices, braid triviality/equality,
// Temperley-Lieb images, the t = -q^{-1} quotient, and a self-check suite.
//
// Exit codes: 0 yes/success, 1 no/failed check, 2 parse or usage error,
// 3 inadmissible sample, 4 degenerate sample.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lkrep/json_io.hpp"
#include "lkrep/rewrite.hpp"

namespace {

using namespace lkrep;
using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitParse = 2;
constexpr int kExitInadmissible = 3;
constexpr int kExitDegenerate = 4;

std::vector<Rational> sample_list() {
    const char* env = std::getenv("LK_SAMPLES");
    if (env == nullptr || *env == '\0') return default_samples();
    std::vector<Rational> out;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_rational(item));
    }
    if (out.empty()) return default_samples();
    return out;
}

std::string coeff_term(const Laurent& coeff, const std::string& label) {
    if (coeff.is_one()) return label;
    if (coeff.term_count() <= 1) return coeff.str() + "*" + label;
    return "(" + coeff.str() + ")*" + label;
}

std::string fingerprint_str(const std::vector<Rational>& coeffs) {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(coeffs[i]);
    }
    return out + "]";
}

json fingerprint_json(const std::vector<Rational>& coeffs) {
    json out = json::array();
    for (const auto& c : coeffs) out.push_back(to_string(c));
    return out;
}

int run_matrix(int n, const std::string& word_text, bool as_json) {
    const BraidWord w = parse_word(word_text, n);
    const RingMatrix m = rep_matrix(w);
    const PairBasis basis(n);
    if (as_json) {
        json out = rep_matrix_to_json(m, basis);
        out["word"] = word_to_json(w);
        std::cout << out.dump(2) << '\n';
        return kExitYes;
    }
    std::cout << "n=" << n << " d=" << basis.size() << " word: "
              << (w.length() == 0 ? "(empty)" : w.str()) << '\n';
    for (int c = 0; c < basis.size(); ++c) {
        std::cout << basis.label(c) << " -> ";
        bool first = true;
        for (int r = 0; r < basis.size(); ++r) {
            if (m.at(r, c).is_zero()) continue;
            if (!first) std::cout << " + ";
            first = false;
            std::cout << coeff_term(m.at(r, c), basis.label(r));
        }
        if (first) std::cout << '0';
        std::cout << '\n';
    }
    return kExitYes;
}

int run_trivial(int n, const std::string& word_text, bool as_json) {
    const BraidWord w = parse_word(word_text, n);
    const bool trivial = is_trivial(w);
    const auto fingerprint = rep_fingerprint(w);
    if (as_json) {
        json out{{"word", word_to_json(w)},
                 {"trivial", trivial},
                 {"fingerprint", fingerprint_json(fingerprint)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (trivial ? "trivial" : "nontrivial") << '\n';
        std::cout << "word: " << (w.length() == 0 ? "(empty)" : w.str())
                  << " (n=" << n << ", exponent sum " << w.exponent_sum() << ")\n";
        std::cout << "fingerprint at (q,t)=(4/9,-9/4): " << fingerprint_str(fingerprint)
                  << '\n';
    }
    return trivial ? kExitYes : kExitNo;
}

int run_equal(int n, const std::string& w1_text, const std::string& w2_text, bool as_json) {
    const BraidWord a = parse_word(w1_text, n);
    const BraidWord b = parse_word(w2_text, n);
    const bool equal = words_equal(a, b);
    if (as_json) {
        json out{{"w1", word_to_json(a)},
                 {"w2", word_to_json(b)},
                 {"equal", equal},
                 {"fingerprint_w1", fingerprint_json(rep_fingerprint(a))},
                 {"fingerprint_w2", fingerprint_json(rep_fingerprint(b))}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (equal ? "equal" : "distinct") << '\n';
    }
    return equal ? kExitYes : kExitNo;
}

int run_tl(int n, const std::string& word_text, bool as_json) {
    const BraidWord w = parse_word(word_text, n);
    const TLElement image = braid_to_tl(w);
    if (as_json) {
        json out = tl_element_to_json(image);
        out["word"] = word_to_json(w);
        std::cout << out.dump(2) << '\n';
        return kExitYes;
    }
    std::cout << "n=" << n << " word: " << (w.length() == 0 ? "(empty)" : w.str())
              << '\n';
    std::cout << image.str() << '\n';
    std::cout << "(" << image.terms().size() << " diagram"
              << (image.terms().size() == 1 ? "" : "s") << ")\n";
    return kExitYes;
}

void print_qmatrix(const QMatrix& m, const std::string& indent) {
    for (int r = 0; r < m.rows(); ++r) {
        std::cout << indent << '[';
        for (int c = 0; c < m.cols(); ++c)
            std::cout << (c ? " " : "") << to_string(m.at(r, c));
        std::cout << "]\n";
    }
}

int run_quotient(int n, const std::string& s0_text, bool as_json, bool verbose) {
    const Rational s0 = parse_rational(s0_text);
    const QuotientReport report = verify_theorem_tl(n, s0);
    if (as_json) {
        std::cout << quotient_report_to_json(report).dump(2) << '\n';
    } else {
        std::cout << "n=" << report.n << " s0=" << to_string(report.s0)
                  << " (q=" << to_string(report.s0 * report.s0) << ")\n";
        std::cout << "dim ambient:   " << report.dim_ambient << '\n';
        std::cout << "dim invariant: " << report.dim_invariant << '\n';
        std::cout << "dim quotient:  " << report.dim_quotient << '\n';
        std::cout << "hecke relation on quotient: " << (report.hecke_ok ? "ok" : "FAILED")
                  << '\n';
        std::cout << "z images vanish on quotient: " << (report.z_ok ? "ok" : "FAILED")
                  << '\n';
        std::cout << "braid relations on quotient: "
                  << (report.braid_relations_ok ? "ok" : "FAILED") << '\n';
        if (report.intertwiner) {
            std::cout << "intertwiner: found (" << report.dim_quotient << "x"
                      << report.dim_quotient << ", invertible)\n";
        } else {
            std::cout << "intertwiner: not found at this sample\n";
        }
        if (verbose) {
            for (std::size_t k = 0; k < report.quotient_generators.size(); ++k) {
                std::cout << "quotient generator " << k + 1 << ":\n";
                print_qmatrix(report.quotient_generators[k], "  ");
            }
            if (report.intertwiner) {
                std::cout << "intertwiner:\n";
                print_qmatrix(*report.intertwiner, "  ");
            }
        }
    }
    const bool ok = report.hecke_ok && report.z_ok && report.braid_relations_ok &&
                    report.intertwiner.has_value();
    return ok ? kExitYes : kExitNo;
}

// ---- verify: the self-check suite ----------------------------------------

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

long catalan(int n) {
    long c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

void check_krammer_relations(std::vector<Check>& out, int n_max) {
    Check braid{"krammer_braid_relations"};
    Check comm{"krammer_far_commutation"};
    for (int n = 2; n <= n_max; ++n) {
        std::vector<RingMatrix> g;
        for (int i = 1; i <= n - 1; ++i) g.push_back(krammer_generator(n, i, 1));
        for (int i = 0; i + 1 < n - 1; ++i) {
            if (g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1]) {
                braid.pass = false;
                braid.detail = "failed at n=" + std::to_string(n) + " i=" + std::to_string(i + 1);
            }
        }
        for (int i = 0; i < n - 1; ++i) {
            for (int j = i + 2; j < n - 1; ++j) {
                if (g[i] * g[j] != g[j] * g[i]) {
                    comm.pass = false;
                    comm.detail = "failed at n=" + std::to_string(n);
                }
            }
        }
    }
    out.push_back(braid);
    out.push_back(comm);
}

void check_krammer_inverses(std::vector<Check>& out, int n_max) {
    Check c{"krammer_generator_inverses"};
    for (int n = 2; n <= n_max; ++n) {
        const int d = n * (n - 1) / 2;
        for (int i = 1; i <= n - 1; ++i) {
            if (krammer_generator(n, i, 1) * krammer_generator(n, i, -1) !=
                RingMatrix::identity(d)) {
                c.pass = false;
                c.detail = "n=" + std::to_string(n) + " i=" + std::to_string(i);
            }
        }
    }
    out.push_back(c);
}

void check_krammer_smoke(std::vector<Check>& out, std::uint64_t seed) {
    Check faithful{"krammer_nonzero_exponent_sum_nontrivial"};
    Check inverse_law{"krammer_inverse_law"};
    Check det_grading{"krammer_determinant_grading"};
    Check rewrite{"krammer_rewritten_words_equal"};

    const int n = 4;
    const Laurent unit = ring_det(krammer_generator(n, 1, 1));
    for (int k = 0; k < 25; ++k) {
        BraidWord w = random_word(n, 2 + k % 11, seed + k);
        if (w.exponent_sum() != 0 && is_trivial(w)) {
            faithful.pass = false;
            faithful.detail = w.str();
        }
        if (rep_matrix(word_concat(w, w.inverse())) !=
            RingMatrix::identity(PairBasis(n).size())) {
            inverse_law.pass = false;
            inverse_law.detail = w.str();
        }
        if (k < 8) {
            if (ring_det(rep_matrix(w)) != unit.pow(w.exponent_sum())) {
                det_grading.pass = false;
                det_grading.detail = w.str();
            }
            const BraidWord v = rewrite_equivalent(w, 12, seed + 1000 + k);
            if (!words_equal(w, v)) {
                rewrite.pass = false;
                rewrite.detail = w.str() + " vs " + v.str();
            }
        }
    }
    out.push_back(faithful);
    out.push_back(inverse_law);
    out.push_back(det_grading);
    out.push_back(rewrite);
}

void check_tl_symbolic(std::vector<Check>& out, int n_max) {
    Check catalan_check{"tl_catalan_counts"};
    Check relations{"tl_defining_relations"};
    Check braid_image{"tl_braid_image_well_defined"};
    Check hecke{"tl_hecke_quadratic_image"};
    Check z_check{"tl_z_images_vanish"};

    for (int n = 2; n <= n_max; ++n) {
        if (static_cast<long>(diagram_table(n).diagrams.size()) != catalan(n)) {
            catalan_check.pass = false;
            catalan_check.detail = "n=" + std::to_string(n);
        }
        const Laurent delta = tl_delta();
        const Laurent q = Laurent::q();
        for (int i = 1; i <= n - 1; ++i) {
            const TLElement ei = TLElement::e(n, i);
            if (ei * ei != delta * ei) relations.pass = false;
            for (int j = 1; j <= n - 1; ++j) {
                if (std::abs(i - j) == 1) {
                    const TLElement ej = TLElement::e(n, j);
                    if (ei * ej * ei != ei) relations.pass = false;
                } else if (std::abs(i - j) > 1) {
                    const TLElement ej = TLElement::e(n, j);
                    if (ei * ej != ej * ei) relations.pass = false;
                }
            }
        }
        for (int i = 1; i + 1 <= n - 1; ++i) {
            const BraidWord lhs(n, {i, i + 1, i});
            const BraidWord rhs(n, {i + 1, i, i + 1});
            if (braid_to_tl(lhs) != braid_to_tl(rhs)) {
                braid_image.pass = false;
                braid_image.detail = "n=" + std::to_string(n) + " i=" + std::to_string(i);
            }
            if (!z_image(n, i, i + 1).is_zero() || !z_image(n, i + 1, i).is_zero()) {
                z_check.pass = false;
                z_check.detail = "n=" + std::to_string(n) + " i=" + std::to_string(i);
            }
        }
        for (int i = 1; i <= n - 1; ++i) {
            const TLElement sigma = braid_to_tl(BraidWord(n, {i}));
            const TLElement one = TLElement::one(n);
            const TLElement quad = (sigma - one) * (sigma + q * one);
            if (!quad.is_zero()) {
                hecke.pass = false;
                hecke.detail = "n=" + std::to_string(n) + " i=" + std::to_string(i);
            }
        }
    }
    out.push_back(braid_image);
    out.push_back(catalan_check);
    out.push_back(hecke);
    out.push_back(relations);
    out.push_back(z_check);
}

void check_iota(std::vector<Check>& out, int n_max) {
    Check counts{"iota_kernel_counts"};
    Check survivors{"iota_survivors_match_s_basis"};
    Check divides{"iota_multiplier_divisibility"};
    const Laurent full = iota_multipliers(2).multiplier(1, 2);  // (1-q)^2(1+qt)(1-t)
    for (int n = 4; n <= n_max; ++n) {
        const auto kernel = iota_kernel_at_specialization(n);
        const auto rest = iota_survivors_at_specialization(n);
        if (static_cast<int>(kernel.size()) != n ||
            static_cast<int>(rest.size()) != n * (n - 3) / 2) {
            counts.pass = false;
            counts.detail = "n=" + std::to_string(n);
        }
        std::vector<std::pair<int, int>> expected;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (j > std::max(i + 1, 3)) expected.emplace_back(i, j);
        if (rest != expected) {
            survivors.pass = false;
            survivors.detail = "n=" + std::to_string(n);
        }
        const IotaModel model(n);
        for (int idx = 0; idx < model.basis().size(); ++idx) {
            auto [i, j] = model.basis().pair(idx);
            if (!Laurent::divide_exact(full, model.multiplier(i, j))) {
                divides.pass = false;
                divides.detail = "n=" + std::to_string(n);
            }
        }
    }
    out.push_back(counts);
    out.push_back(divides);
    out.push_back(survivors);
}

void check_samples(std::vector<Check>& out, int n_max, const std::vector<Rational>& samples) {
    Check smod{"s_module_dimensions"};
    Check qdim{"quotient_dimensions"};
    Check qrel{"quotient_relations"};
    Check inter{"theorem_intertwiner"};
    Check det_consistency{"specialized_determinant_consistency"};

    for (int n = 4; n <= n_max; ++n) {
        int last_dim_w = -1;
        for (const auto& s0 : samples) {
            try {
                const SModule sm = s_module(n, s0);
                if (sm.dim != n * (n - 3) / 2) {
                    smod.pass = false;
                    smod.detail = "n=" + std::to_string(n) + " s0=" + to_string(s0);
                }
                const QuotientReport report = verify_theorem_tl(n, s0);
                if (report.dim_quotient != n * (n - 3) / 2 ||
                    (last_dim_w >= 0 && report.dim_invariant != last_dim_w)) {
                    qdim.pass = false;
                    qdim.detail = "n=" + std::to_string(n) + " s0=" + to_string(s0);
                }
                last_dim_w = report.dim_invariant;
                if (!report.hecke_ok || !report.z_ok || !report.braid_relations_ok) {
                    qrel.pass = false;
                    qrel.detail = "n=" + std::to_string(n) + " s0=" + to_string(s0);
                }
                if (!report.intertwiner) {
                    inter.pass = false;
                    inter.detail = "n=" + std::to_string(n) + " s0=" + to_string(s0);
                }
            } catch (const inadmissible_sample_error&) {
                throw;  // exit 3: the sample list itself is unusable
            } catch (const degenerate_sample_error&) {
                throw;  // exit 4 with a retry hint
            } catch (const error& e) {
                smod.pass = qdim.pass = qrel.pass = inter.pass = false;
                smod.detail = qdim.detail = qrel.detail = inter.detail = e.what();
            }
        }
    }
    {
        const int n = 4;
        for (const auto& s0 : samples) {
            const Rational q0 = s0 * s0;
            Rational t0 = Rational(-1) / q0;
            t0.canonicalize();
            const auto gens = lk_specialized_generators(n, s0);
            for (int i = 1; i <= n - 1; ++i) {
                const Rational symbolic =
                    ring_det(krammer_generator(n, i, 1)).eval(s0, t0);
                // d = 6 is even, so det equals the constant char-poly term.
                const Rational sampled = char_poly(gens[i - 1]).back();
                if (sampled != symbolic) {
                    det_consistency.pass = false;
                    det_consistency.detail = "n=4 i=" + std::to_string(i);
                }
            }
        }
    }
    out.push_back(qdim);
    out.push_back(qrel);
    out.push_back(smod);
    out.push_back(det_consistency);
    out.push_back(inter);
}

int run_verify(int n_max, std::uint64_t seed, bool as_json, bool verbose) {
    const auto samples = sample_list();
    for (const auto& s0 : samples) require_admissible_sample(s0);
    if (verbose && !as_json) {
        std::cout << "samples:";
        for (const auto& s0 : samples) std::cout << ' ' << to_string(s0);
        std::cout << "  seed: " << seed << '\n';
    }
    std::vector<Check> checks;
    check_krammer_relations(checks, n_max);
    check_krammer_inverses(checks, std::min(n_max, 5));
    check_krammer_smoke(checks, seed);
    check_tl_symbolic(checks, n_max);
    check_iota(checks, n_max);
    check_samples(checks, n_max, samples);

    std::sort(checks.begin(), checks.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
    bool all_pass = true;
    if (as_json) {
        json arr = json::array();
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        std::cout << json{{"n_max", n_max}, {"checks", arr}, {"all_pass", all_pass}}.dump(2)
                  << '\n';
    } else {
        int passed = 0;
        for (const auto& c : checks) {
            if (c.pass) {
                ++passed;
                std::cout << "PASS " << c.name << '\n';
            } else {
                all_pass = false;
                std::cout << "FAIL " << c.name
                          << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
            }
        }
        std::cout << "verify: " << passed << "/" << checks.size()
                  << " checks passed (n_max=" << n_max << ")\n";
    }
    return all_pass ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lawrence-Krammer / Temperley-Lieb engine"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "Print extra detail");

    int n = 4;
    std::string word_text;
    std::string w1_text, w2_text;
    std::string s0_text = "2/3";
    int n_max = 6;
    std::uint64_t seed = 7;

    auto* matrix_cmd = app.add_subcommand("matrix", "Krammer matrix of a braid word");
    matrix_cmd->add_option("--n", n, "Strand count")->required();
    matrix_cmd->add_option("--word", word_text, "Braid word")->required();

    auto* trivial_cmd = app.add_subcommand("trivial", "Decide triviality of a braid word");
    trivial_cmd->add_option("--n", n, "Strand count")->required();
    trivial_cmd->add_option("--word", word_text, "Braid word")->required();

    auto* equal_cmd = app.add_subcommand("equal", "Decide equality of two braid words");
    equal_cmd->add_option("--n", n, "Strand count")->required();
    equal_cmd->add_option("--w1", w1_text, "First braid word")->required();
    equal_cmd->add_option("--w2", w2_text, "Second braid word")->required();

    auto* tl_cmd = app.add_subcommand("tl", "Temperley-Lieb image of a braid word");
    tl_cmd->add_option("--n", n, "Strand count")->required();
    tl_cmd->add_option("--word", word_text, "Braid word")->required();

    auto* quotient_cmd =
        app.add_subcommand("quotient", "Quotient of the specialized representation");
    quotient_cmd->add_option("--n", n, "Strand count")->required();
    quotient_cmd->add_option("--s0", s0_text, "Sample value of q^(1/2), e.g. 2/3")
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Run the full self-check suite");
    verify_cmd->add_option("--n-max", n_max, "Largest strand count checked")
        ->check(CLI::Range(2, 9))
        ->capture_default_str();
    verify_cmd->add_option("--seed", seed, "Seed for randomized checks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    const bool as_json = format == "json";
    try {
        if (matrix_cmd->parsed()) return run_matrix(n, word_text, as_json);
        if (trivial_cmd->parsed()) return run_trivial(n, word_text, as_json);
        if (equal_cmd->parsed()) return run_equal(n, w1_text, w2_text, as_json);
        if (tl_cmd->parsed()) return run_tl(n, word_text, as_json);
        if (quotient_cmd->parsed()) return run_quotient(n, s0_text, as_json, verbose);
        if (verify_cmd->parsed()) return run_verify(n_max, seed, as_json, verbose);
    } catch (const inadmissible_sample_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInadmissible;
    } catch (const degenerate_sample_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::cerr << "hint: retry with different samples (--s0 or LK_SAMPLES)\n";
        return kExitDegenerate;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitParse;
}
