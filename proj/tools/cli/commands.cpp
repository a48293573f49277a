#include "cli/commands.hpp"

#include "qstirling/analysis.hpp"
#include "qstirling/code_model.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/generating.hpp"
#include "qstirling/tree_model.hpp"
#include "qstirling/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <ostream>
#include <set>
#include <thread>

namespace qstir::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kDesNote =
    "des counts strict descents plus one, so every descent polynomial is divisible by t";
constexpr std::size_t kDefaultGlobalCap = 10;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Check {
    std::string name;
    std::string detail;
    bool ok = false;
};

bool all_ok(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

const char* verdict(bool ok) { return ok ? "true" : "false"; }

void validate_config(const RunConfig& config) {
    if (config.max_size == 0) throw UsageError("--max-size must be positive");
    if (config.max_size > global_cap()) {
        throw SizeLimitError("--max-size", config.max_size, global_cap());
    }
    if (config.m_range.first > config.m_range.last) throw UsageError("--m range is empty");
}

MultisetSpec load_multiset(const RunConfig& config) {
    validate_config(config);
    if (config.multiset.empty()) throw UsageError("--multiset is required");
    MultisetSpec M = parse_multiset(config.multiset);
    require_within_cap(M, config.max_size, "multiset");
    return M;
}

std::string describe(const MultisetSpec& M) {
    return M.to_set_notation() + " (K=" + std::to_string(M.K()) + ", n=" + std::to_string(M.n()) + ")";
}

void emit_checks(const MultisetSpec& M, const std::vector<Check>& checks, Format format,
                 std::ostream& out) {
    const bool pass = all_ok(checks);
    switch (format) {
    case Format::json: {
        json doc;
        doc["multiset"] = M.to_string();
        doc["checks"] = json::array();
        for (const auto& c : checks) {
            doc["checks"].push_back({{"name", c.name}, {"detail", c.detail}, {"ok", c.ok}});
        }
        doc["pass"] = pass;
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "name,detail,ok\n";
        for (const auto& c : checks) {
            out << csv_field(c.name) << ',' << csv_field(c.detail) << ',' << verdict(c.ok) << '\n';
        }
        break;
    case Format::text:
        out << "multiset " << describe(M) << '\n';
        for (const auto& c : checks) {
            out << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
        }
        out << (pass ? "pass" : "FAIL") << '\n';
        break;
    }
}

// ---------------------------------------------------------------------------
// bijection checks

std::vector<Check> phi_checks(const MultisetSpec& M, std::size_t cap) {
    std::size_t trees = 0;
    std::size_t bad_tree = 0;
    std::size_t bad_image = 0;
    std::size_t bad_triple = 0;
    std::size_t bad_back = 0;
    std::set<Word> images;
    for_each_tree(M, [&](const OrderedLabeledTree& T) {
        ++trees;
        if (!validate_tree(M, T)) ++bad_tree;
        const Word w = phi(T);
        if (!is_permutation_of(M, w) || !is_quasi_stirling(w)) ++bad_image;
        if (cdes_tree(T) != des(w) || tree_ends(T) != ends(w)) ++bad_triple;
        if (phi_inverse(w) != T) ++bad_back;
        images.insert(w);
    }, cap);

    std::size_t words = 0;
    std::size_t missed = 0;
    std::size_t bad_forth = 0;
    for_each_word(M, [&](const Word& w) {
        if (!is_quasi_stirling(w)) return;
        ++words;
        if (!images.count(w)) ++missed;
        if (phi(phi_inverse(w)) != w) ++bad_forth;
    }, cap);

    std::vector<Check> checks;
    checks.push_back({"phi cardinality",
                      "|T_M| = " + std::to_string(trees) + ", |QS_M| = " + std::to_string(words) +
                          ", distinct images = " + std::to_string(images.size()),
                      trees == words && images.size() == trees && missed == 0 && bad_tree == 0 &&
                          bad_image == 0});
    checks.push_back({"phi statistics", "(cdes, first, last) = (des, first, last) failures: " +
                                            std::to_string(bad_triple),
                      bad_triple == 0});
    checks.push_back({"phi round trips",
                      "phi_inverse(phi(T)) failures: " + std::to_string(bad_back) +
                          ", phi(phi_inverse(w)) failures: " + std::to_string(bad_forth),
                      bad_back == 0 && bad_forth == 0});
    return checks;
}

using PairKey = std::pair<std::string, std::string>;

PairKey key_of(const CodePair& c) { return {format_pool(c), format_trace(c)}; }

std::vector<Check> code_checks(const MultisetSpec& M, std::size_t m, std::size_t cap) {
    const auto block_trees = enumerate_block_trees(M, m, cap);
    const auto half_edge_trees = enumerate_half_edge_trees(M, m, cap);
    const auto pairs = enumerate_code_pairs(M, m, cap);
    const BigInt expected = closed_form_coefficient(M, m);
    const std::string tag = " (m=" + std::to_string(m) + ")";

    std::size_t bad_members = 0;
    std::set<std::string> half_edge_set;
    for (const auto& T : half_edge_trees) {
        if (half_edge_tree_violation(M, T) || T.half_edge_count() != m) ++bad_members;
        half_edge_set.insert(format_tree(T.tree));
    }
    std::set<PairKey> pair_set;
    for (const auto& c : pairs) {
        if (code_pair_violation(M, c) || c.size() != m) ++bad_members;
        pair_set.insert(key_of(c));
    }

    std::set<std::string> psi_images;
    std::set<PairKey> theta_images;
    std::size_t psi_bad = 0;
    std::size_t theta_bad = 0;
    std::size_t order_bad = 0;
    for (const auto& T : block_trees) {
        if (block_tree_violation(M, T) || T.block_count() != m) ++bad_members;
        const HalfEdgeTree image = psi(M, T);
        if (half_edge_tree_violation(M, image) || image.half_edge_count() != m ||
            psi_inverse(M, image) != T) {
            ++psi_bad;
        }
        psi_images.insert(format_tree(image.tree));

        const CodePair c = theta(M, T);
        if (code_pair_violation(M, c) || c.size() != m || theta_inverse(c, M) != T) ++theta_bad;
        theta_images.insert(key_of(c));

        std::vector<Value> order = pruning_order(T);
        std::sort(order.begin(), order.end());
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (order[i] != static_cast<Value>(i + 1)) {
                ++order_bad;
                break;
            }
        }
        if (order.size() != M.n()) ++order_bad;
    }
    for (const auto& T : half_edge_trees) {
        if (psi(M, psi_inverse(M, T)) != T) ++psi_bad;
    }
    for (const auto& c : pairs) {
        if (theta(M, theta_inverse(c, M)) != c) ++theta_bad;
    }

    const bool counts_ok = BigInt(block_trees.size()) == expected &&
                           BigInt(half_edge_trees.size()) == expected && BigInt(pairs.size()) == expected;
    std::vector<Check> checks;
    checks.push_back({"cardinality" + tag,
                      "|BT| = " + std::to_string(block_trees.size()) + ", |T*| = " +
                          std::to_string(half_edge_trees.size()) + ", |P| = " + std::to_string(pairs.size()) +
                          ", closed form = " + to_string(expected),
                      counts_ok && bad_members == 0});
    checks.push_back({"psi bijection" + tag,
                      "distinct images = " + std::to_string(psi_images.size()) +
                          ", round-trip failures = " + std::to_string(psi_bad),
                      psi_bad == 0 && psi_images == half_edge_set});
    checks.push_back({"theta bijection" + tag,
                      "distinct images = " + std::to_string(theta_images.size()) +
                          ", round-trip failures = " + std::to_string(theta_bad) +
                          ", bad pruning orders = " + std::to_string(order_bad),
                      theta_bad == 0 && order_bad == 0 && theta_images == pair_set});
    return checks;
}

std::vector<Check> spot_checks(const MultisetSpec& M, const std::string& text) {
    const Word w = parse_word(text);
    validate_word(M, w);
    std::vector<Check> checks;
    const OrderedLabeledTree T = phi_inverse(w);
    const Ends tree_end = tree_ends(T);
    const Ends word_end = ends(w);
    const std::size_t c = cdes_tree(T);
    const std::size_t d = des(w);
    checks.push_back({"spot tree", format_tree(T), validate_tree(M, T)});
    checks.push_back({"spot round trip", "phi(phi_inverse(w)) = " + format_word(phi(T)), phi(T) == w});
    checks.push_back({"spot statistics",
                      "(cdes, first, last) = (" + std::to_string(c) + ", " + tree_end.first.to_string() +
                          ", " + tree_end.last.to_string() + "), (des, first, last) = (" +
                          std::to_string(d) + ", " + word_end.first.to_string() + ", " +
                          word_end.last.to_string() + ")",
                      c == d && tree_end == word_end});
    return checks;
}

std::vector<Check> bijection_checks(const MultisetSpec& M, const RunConfig& config) {
    std::vector<Check> checks = phi_checks(M, config.max_size);
    if (config.phi_only) return checks;
    for (std::size_t m = config.m_range.first; m <= config.m_range.last; ++m) {
        for (auto& c : code_checks(M, m, config.max_size)) checks.push_back(std::move(c));
    }
    return checks;
}

// ---------------------------------------------------------------------------
// analysis

struct Analysis {
    CorollaryReduction corollary;
    IntPolynomial polynomial;
    RootReport roots;
    bool log_concave = false;
    bool unimodal = false;

    bool pass() const {
        return roots.all_real && roots.all_nonpositive && log_concave && unimodal && corollary.equal;
    }
};

Analysis analyze(const MultisetSpec& M, std::size_t cap) {
    Analysis a{corollary_reduction(M, cap), {}, {}, false, false};
    a.polynomial = a.corollary.quasi_stirling;
    a.roots = is_real_rooted(a.polynomial);
    a.log_concave = is_log_concave(a.polynomial);
    a.unimodal = is_unimodal(a.polynomial);
    return a;
}

json analysis_json(const MultisetSpec& M, const Analysis& a) {
    json doc;
    doc["multiset"] = M.to_string();
    doc["polynomial"] = to_string(a.polynomial);
    doc["all_real"] = a.roots.all_real;
    doc["all_nonpositive"] = a.roots.all_nonpositive;
    doc["log_concave"] = a.log_concave;
    doc["unimodal"] = a.unimodal;
    doc["corollary_M_prime"] = a.corollary.M_prime.to_string();
    doc["corollary_equal"] = a.corollary.equal;
    return doc;
}

} // namespace

std::size_t global_cap() {
    if (const char* env = std::getenv("QSTIRLING_GLOBAL_CAP")) {
        std::size_t value = 0;
        const std::string_view text(env);
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && end == text.data() + text.size() && value > 0) return value;
    }
    return kDefaultGlobalCap;
}

MRange parse_m_range(std::string_view text) {
    const auto number = [&](std::string_view token) {
        std::size_t value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
            throw ParseError("invalid --m value \"" + std::string(text) + "\"");
        }
        return value;
    };
    const std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        const std::size_t m = number(text);
        return {m, m};
    }
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

Format parse_format(std::string_view text) {
    if (text == "text") return Format::text;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    throw ParseError("unknown format \"" + std::string(text) + "\"");
}

int cmd_poly(const RunConfig& config, std::ostream& out) {
    const MultisetSpec M = load_multiset(config);
    if (config.method != "words" && config.method != "trees" && config.method != "both") {
        throw UsageError("--method must be words, trees or both");
    }
    std::vector<std::pair<std::string, IntPolynomial>> results;
    if (config.method != "trees") {
        results.emplace_back("words", quasi_stirling_polynomial(M, PolynomialMethod::via_words, config.max_size));
    }
    if (config.method != "words") {
        results.emplace_back("trees", quasi_stirling_polynomial(M, PolynomialMethod::via_trees, config.max_size));
    }
    const bool agree = results.front().second == results.back().second;

    switch (config.format) {
    case Format::json: {
        json doc;
        doc["multiset"] = M.to_string();
        doc["K"] = M.K();
        doc["n"] = M.n();
        doc["method"] = config.method;
        doc["polynomials"] = json::object();
        for (const auto& [name, p] : results) doc["polynomials"][name] = to_string(p);
        doc["agree"] = agree;
        doc["note"] = kDesNote;
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "method,polynomial\n";
        for (const auto& [name, p] : results) out << name << ',' << csv_field(to_string(p)) << '\n';
        break;
    case Format::text:
        out << "multiset " << describe(M) << '\n';
        for (const auto& [name, p] : results) out << name << ": " << to_display_string(p) << '\n';
        if (results.size() == 2) out << "agree=" << verdict(agree) << '\n';
        out << "note: " << kDesNote << '\n';
        break;
    }
    return agree ? kOk : kCheckFailed;
}

int cmd_verify_identity(const RunConfig& config, std::ostream& out) {
    const MultisetSpec M = load_multiset(config);
    const IdentityReport report = verify_main_identity(M, config.terms, config.max_size);

    switch (config.format) {
    case Format::json: {
        json doc;
        doc["multiset"] = M.to_string();
        doc["K"] = M.K();
        doc["n"] = M.n();
        doc["m_max"] = report.m_max;
        doc["rows"] = json::array();
        for (const auto& row : report.rows) {
            doc["rows"].push_back({{"m", row.m},
                                   {"series", to_string(row.series)},
                                   {"closed_form", to_string(row.closed_form)},
                                   {"ok", row.ok}});
        }
        doc["pass"] = report.pass;
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "m,series,closed_form,ok\n";
        for (const auto& row : report.rows) {
            out << row.m << ',' << to_string(row.series) << ',' << to_string(row.closed_form) << ','
                << verdict(row.ok) << '\n';
        }
        break;
    case Format::text:
        out << "multiset " << describe(M) << '\n';
        out << "polynomial: " << to_display_string(report.via_words)
            << " (words and trees agree: " << verdict(report.methods_agree) << ")\n";
        out << "coefficients of P(t)/(1-t)^" << M.K() + 1 << " against m^(n-1)*C(K-n+m, K-n+1)\n";
        out << std::setw(4) << "m" << std::setw(16) << "series" << std::setw(16) << "closed_form"
            << "  ok\n";
        for (const auto& row : report.rows) {
            out << std::setw(4) << row.m << std::setw(16) << to_string(row.series) << std::setw(16)
                << to_string(row.closed_form) << "  " << (row.ok ? "ok" : "MISMATCH") << '\n';
        }
        out << (report.pass ? "pass" : "FAIL") << '\n';
        out << "note: " << kDesNote << '\n';
        break;
    }
    return report.pass ? kOk : kCheckFailed;
}

int cmd_bijections(const RunConfig& config, std::ostream& out) {
    validate_config(config);
    if (config.multiset.empty()) throw UsageError("--multiset is required");
    const MultisetSpec M = parse_multiset(config.multiset);
    std::vector<Check> checks;
    if (config.spot) {
        checks = spot_checks(M, *config.spot);
    } else {
        require_within_cap(M, config.max_size, "multiset");
        checks = bijection_checks(M, config);
    }
    emit_checks(M, checks, config.format, out);
    return all_ok(checks) ? kOk : kCheckFailed;
}

int cmd_analyze(const RunConfig& config, std::ostream& out) {
    const MultisetSpec M = load_multiset(config);
    const Analysis a = analyze(M, config.max_size);
    switch (config.format) {
    case Format::json:
        out << analysis_json(M, a).dump(2) << '\n';
        break;
    case Format::csv:
        out << "multiset,polynomial,all_real,all_nonpositive,log_concave,unimodal,corollary_M_prime,"
               "corollary_equal\n";
        out << csv_field(M.to_string()) << ',' << csv_field(to_string(a.polynomial)) << ','
            << verdict(a.roots.all_real) << ',' << verdict(a.roots.all_nonpositive) << ','
            << verdict(a.log_concave) << ',' << verdict(a.unimodal) << ','
            << csv_field(a.corollary.M_prime.to_string()) << ',' << verdict(a.corollary.equal) << '\n';
        break;
    case Format::text:
        out << "multiset " << describe(M) << '\n';
        out << "polynomial: " << to_display_string(a.polynomial) << '\n';
        out << "squarefree part (t stripped): " << to_display_string(a.roots.squarefree)
            << ", distinct real roots: " << a.roots.distinct_real_roots << '\n';
        out << "all_real=" << verdict(a.roots.all_real) << '\n';
        out << "all_nonpositive=" << verdict(a.roots.all_nonpositive) << '\n';
        out << "log_concave=" << verdict(a.log_concave) << '\n';
        out << "unimodal=" << verdict(a.unimodal) << '\n';
        out << "M'=" << a.corollary.M_prime.to_set_notation() << " (" << a.corollary.M_prime.to_string()
            << "), stirling: " << to_display_string(a.corollary.stirling) << '\n';
        out << "equal=" << verdict(a.corollary.equal) << '\n';
        out << (a.pass() ? "pass" : "FAIL") << '\n';
        break;
    }
    return a.pass() ? kOk : kCheckFailed;
}

int cmd_count(const RunConfig& config, std::ostream& out) {
    const MultisetSpec M = load_multiset(config);
    std::size_t words = 0;
    std::size_t stirling = 0;
    std::vector<std::size_t> by_des(M.K() + 1, 0);
    for_each_word(M, [&](const Word& w) {
        ++words;
        if (is_stirling(w)) ++stirling;
        if (is_quasi_stirling(w)) ++by_des[des(w)];
    }, config.max_size);
    std::size_t quasi = 0;
    for (std::size_t c : by_des) quasi += c;

    std::vector<Check> checks;
    checks.push_back({"permutations", std::to_string(words), true});
    checks.push_back({"stirling", std::to_string(stirling), true});
    checks.push_back({"quasi-stirling", std::to_string(quasi), true});
    std::string distribution;
    for (std::size_t d = 1; d < by_des.size(); ++d) {
        if (d > 1) distribution += ' ';
        distribution += std::to_string(by_des[d]);
    }
    checks.push_back({"quasi-stirling by des=1..K", distribution, true});
    const SpecialCounts special = special_counts(M);
    if (special.total) {
        checks.push_back({"n! * Catalan(n)", "predicted " + to_string(*special.total) + ", observed " +
                                                 std::to_string(quasi),
                          *special.total == quasi});
    }
    if (special.top_des) {
        const std::size_t observed = by_des[M.n()];
        checks.push_back({"words with des = n", "predicted " + to_string(*special.top_des) +
                                                    ", observed " + std::to_string(observed),
                          *special.top_des == observed});
    }
    for (std::size_t m = config.m_range.first; m <= config.m_range.last; ++m) {
        checks.push_back({"|T*_{M," + std::to_string(m) + "}| closed form",
                          to_string(closed_form_coefficient(M, m)), true});
    }
    emit_checks(M, checks, config.format, out);
    return all_ok(checks) ? kOk : kCheckFailed;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
    validate_config(config);
    const std::vector<MultisetSpec> all = multisets_up_to(config.max_size);

    struct Outcome {
        bool identity = false;
        bool analysis = false;
        bool bijections = false;
        bool pass() const { return identity && analysis && bijections; }
    };
    const auto evaluate = [&config](const MultisetSpec& M) {
        Outcome o;
        o.identity = verify_main_identity(M, config.terms, config.max_size).pass;
        o.analysis = analyze(M, config.max_size).pass();
        o.bijections = all_ok(bijection_checks(M, config));
        return o;
    };

    // Fan out in batches; results land at their multiset's index.
    std::vector<Outcome> outcomes(all.size());
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < all.size(); start += workers) {
        std::vector<std::future<Outcome>> batch;
        const std::size_t stop = std::min(all.size(), start + workers);
        for (std::size_t i = start; i < stop; ++i) {
            batch.push_back(std::async(std::launch::async, evaluate, std::cref(all[i])));
        }
        for (std::size_t i = start; i < stop; ++i) outcomes[i] = batch[i - start].get();
    }

    std::size_t failures = 0;
    for (const auto& o : outcomes) failures += o.pass() ? 0 : 1;

    switch (config.format) {
    case Format::json: {
        json doc;
        doc["max_size"] = config.max_size;
        doc["terms"] = config.terms;
        doc["m_range"] = std::to_string(config.m_range.first) + ".." + std::to_string(config.m_range.last);
        doc["multisets"] = json::array();
        for (std::size_t i = 0; i < all.size(); ++i) {
            doc["multisets"].push_back({{"multiset", all[i].to_string()},
                                        {"identity", outcomes[i].identity},
                                        {"analysis", outcomes[i].analysis},
                                        {"bijections", outcomes[i].bijections},
                                        {"pass", outcomes[i].pass()}});
        }
        doc["checked"] = all.size();
        doc["failures"] = failures;
        doc["pass"] = failures == 0;
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "multiset,identity,analysis,bijections,pass\n";
        for (std::size_t i = 0; i < all.size(); ++i) {
            out << csv_field(all[i].to_string()) << ',' << verdict(outcomes[i].identity) << ','
                << verdict(outcomes[i].analysis) << ',' << verdict(outcomes[i].bijections) << ','
                << verdict(outcomes[i].pass()) << '\n';
        }
        break;
    case Format::text:
        for (std::size_t i = 0; i < all.size(); ++i) {
            out << std::left << std::setw(24) << all[i].to_set_notation() << std::right
                << " identity=" << (outcomes[i].identity ? "ok" : "FAIL")
                << " analysis=" << (outcomes[i].analysis ? "ok" : "FAIL")
                << " bijections=" << (outcomes[i].bijections ? "ok" : "FAIL") << '\n';
        }
        out << "checked " << all.size() << " multisets with K <= " << config.max_size << ", " << failures
            << " failures\n";
        out << (failures == 0 ? "pass" : "FAIL") << '\n';
        break;
    }
    return failures == 0 ? kOk : kCheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quasi-Stirling permutations: descent polynomials, tree bijections and identity checks",
                 "qstirling"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "text";
    std::string m_range = "0..3";

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--max-size", config.max_size, "Largest multiset size K to enumerate");
    };
    const auto add_multiset = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--multiset", config.multiset, "Multiplicities k1,k2,...,kn");
        if (required) opt->required();
    };

    auto* poly = app.add_subcommand("poly", "Quasi-Stirling polynomial of a multiset");
    add_multiset(poly, true);
    add_common(poly);
    poly->add_option("--method", config.method, "words, trees or both")
        ->check(CLI::IsMember({"words", "trees", "both"}));

    auto* verify = app.add_subcommand("verify-identity", "Check the series identity coefficient by coefficient");
    add_multiset(verify, true);
    add_common(verify);
    verify->add_option("--terms", config.terms, "Largest m to compare");

    auto* bij = app.add_subcommand("bijections", "Exhaustive round-trip checks for phi, psi and theta");
    add_multiset(bij, true);
    add_common(bij);
    bij->add_flag("--phi-only", config.phi_only, "Skip the psi/theta checks");
    bij->add_option("--spot", config.spot, "Check a single word through phi_inverse and phi");
    bij->add_option("--m", m_range, "Half-edge counts to check, a..b");

    auto* analyze_cmd = app.add_subcommand("analyze", "Real roots, log-concavity, unimodality, reduction");
    add_multiset(analyze_cmd, true);
    add_common(analyze_cmd);

    auto* count = app.add_subcommand("count", "Permutation counts and closed-form predictions");
    add_multiset(count, true);
    add_common(count);
    count->add_option("--m", m_range, "Half-edge counts to report, a..b");

    auto* sweep = app.add_subcommand("sweep", "Run every check on all multisets up to a size");
    add_common(sweep);
    sweep->add_option("--terms", config.terms, "Largest m for the identity check");
    sweep->add_option("--m", m_range, "Half-edge counts for psi/theta checks, a..b");
    config.max_size = kDefaultSizeCap;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        config.format = parse_format(format);
        if (sweep->parsed()) {
            if (sweep->count("--max-size") == 0) config.max_size = 6;
            if (sweep->count("--terms") == 0) config.terms = 6;
            if (sweep->count("--m") == 0) m_range = "0..2";
        }
        config.m_range = parse_m_range(m_range);
        if (poly->parsed()) return cmd_poly(config, out);
        if (verify->parsed()) return cmd_verify_identity(config, out);
        if (bij->parsed()) return cmd_bijections(config, out);
        if (analyze_cmd->parsed()) return cmd_analyze(config, out);
        if (count->parsed()) return cmd_count(config, out);
        return cmd_sweep(config, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << '\n';
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
    }
    return kUsageError;
}

} // namespace qstir::cli
