// permkit: command line front end for the permutation toolkit.
//
// Exit codes: 0 on success, 2 for usage and syntax problems (bad flags,
// malformed cycle text, bad numbers), 3 for domain errors (out-of-range
// ranks, sizes that do not cover a support, group size limits).

#include <charconv>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "permkit/cycle_notation.hpp"
#include "permkit/group.hpp"
#include "permkit/perm.hpp"
#include "permkit/ranking.hpp"

using json = nlohmann::json;
using permkit::Bigint;
using permkit::parse_cycles;
using permkit::Perm;
using permkit::PermGroup;
using permkit::Point;
using permkit::to_cycle_text;

namespace {

// Usage-level problem detected after flag parsing; reported like a CLI11
// error, with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string output = "text";
    bool json() const { return output == "json"; }
};

void emit(const Settings& settings, const json& payload,
          const std::function<void()>& print_text) {
    if (settings.json())
        std::cout << payload.dump() << "\n";
    else
        print_text();
}

bool is_integer_token(const std::string& text, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !text.empty() && text[0] == '-') start = 1;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') return false;
    return true;
}

Bigint parse_bigint(const std::string& text) {
    if (!is_integer_token(text, true)) throw UsageError("not an integer: '" + text + "'");
    return Bigint(text);
}

std::int64_t parse_exponent(const std::string& text) {
    if (!is_integer_token(text, true)) throw UsageError("not an integer: '" + text + "'");
    std::int64_t value = 0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size())
        throw UsageError("exponent out of range: '" + text + "'");
    return value;
}

// Half-open range "a..b" meaning the points a, a+1, ..., b-1.
std::vector<Point> parse_point_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError("expected a range like 0..4, got '" + text + "'");
    const std::string left = text.substr(0, dots);
    const std::string right = text.substr(dots + 2);
    if (!is_integer_token(left, false) || !is_integer_token(right, false))
        throw UsageError("expected a range like 0..4, got '" + text + "'");
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    if (std::from_chars(left.data(), left.data() + left.size(), begin).ec != std::errc() ||
        std::from_chars(right.data(), right.data() + right.size(), end).ec != std::errc())
        throw UsageError("range bound out of range in '" + text + "'");
    if (begin > end) throw UsageError("range '" + text + "' runs backwards");
    std::vector<Point> points;
    points.reserve(end - begin);
    for (std::uint64_t p = begin; p < end; ++p) points.push_back(p);
    return points;
}

PermGroup build_group(const std::vector<std::string>& generators, std::size_t max_order) {
    PermGroup g(max_order);
    for (const std::string& text : generators) g.insert(parse_cycles(text));
    return g;
}

std::vector<std::string> element_texts(const PermGroup& g) {
    std::vector<std::string> texts;
    texts.reserve(g.order());
    for (const Perm& p : g.perms()) texts.push_back(to_cycle_text(p));
    return texts;
}

void print_lines(const std::vector<std::string>& lines) {
    for (const std::string& line : lines) std::cout << line << "\n";
}

void emit_elements(const Settings& settings, const PermGroup& g) {
    const std::vector<std::string> texts = element_texts(g);
    emit(settings, json{{"order", g.order()}, {"elements", texts}},
         [&texts] { print_lines(texts); });
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    Settings settings;

    CLI::App app{"Permutation toolkit: cycle algebra, ranking, small permutation groups"};
    app.require_subcommand(1);
    app.add_option("--output", settings.output, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // ---- perm: operations on single permutations ----
    auto* perm_cmd = app.add_subcommand("perm", "Operations on single permutations");
    perm_cmd->require_subcommand(1);
    perm_cmd->fallthrough();

    struct {
        std::vector<std::string> perms;
        std::string perm;
        std::string other;
        std::string exponent;
        std::uint64_t size = 0;
        std::uint64_t seed = 0;
    } perm_args;

    auto* compose = perm_cmd->add_subcommand("compose", "Product, right factor applied first");
    compose->fallthrough();
    compose->add_option("perms", perm_args.perms, "Permutations in cycle notation")
        ->required()
        ->expected(-2);
    compose->callback([&] {
        Perm product;
        for (const std::string& text : perm_args.perms) product = product * parse_cycles(text);
        const std::string out = to_cycle_text(product);
        emit(settings, json{{"cycles", out}}, [&out] { std::cout << out << "\n"; });
    });

    auto* inverse = perm_cmd->add_subcommand("inverse", "Inverse permutation");
    inverse->fallthrough();
    inverse->add_option("perm", perm_args.perm, "Permutation in cycle notation")->required();
    inverse->callback([&] {
        const std::string out = to_cycle_text(parse_cycles(perm_args.perm).inverse());
        emit(settings, json{{"cycles", out}}, [&out] { std::cout << out << "\n"; });
    });

    auto* power = perm_cmd->add_subcommand("power", "Permutation raised to an integer power");
    power->fallthrough();
    power->add_option("perm", perm_args.perm, "Permutation in cycle notation")->required();
    power->add_option("exponent", perm_args.exponent, "Integer exponent, may be negative")
        ->required();
    power->callback([&] {
        const Perm p = parse_cycles(perm_args.perm);
        const std::string out = to_cycle_text(p.pow(parse_exponent(perm_args.exponent)));
        emit(settings, json{{"cycles", out}}, [&out] { std::cout << out << "\n"; });
    });

    auto* order = perm_cmd->add_subcommand("order", "Order in the symmetric group");
    order->fallthrough();
    order->add_option("perm", perm_args.perm, "Permutation in cycle notation")->required();
    order->callback([&] {
        const std::string out = parse_cycles(perm_args.perm).order().str();
        emit(settings, json{{"order", out}}, [&out] { std::cout << out << "\n"; });
    });

    auto* parity = perm_cmd->add_subcommand("parity", "0 for even, 1 for odd");
    parity->fallthrough();
    parity->add_option("perm", perm_args.perm, "Permutation in cycle notation")->required();
    parity->callback([&] {
        const int out = parse_cycles(perm_args.perm).parity();
        emit(settings, json{{"parity", out}}, [out] { std::cout << out << "\n"; });
    });

    auto* sign = perm_cmd->add_subcommand("sign", "+1 for even, -1 for odd");
    sign->fallthrough();
    sign->add_option("perm", perm_args.perm, "Permutation in cycle notation")->required();
    sign->callback([&] {
        const int out = parse_cycles(perm_args.perm).sign();
        emit(settings, json{{"sign", out}}, [out] { std::cout << out << "\n"; });
    });

    auto* cycles = perm_cmd->add_subcommand("cycles", "Canonical cycle notation");
    cycles->fallthrough();
    cycles->add_option("perm", perm_args.perm, "Permutation in cycle notation")->required();
    cycles->callback([&] {
        const std::string out = to_cycle_text(parse_cycles(perm_args.perm));
        emit(settings, json{{"cycles", out}}, [&out] { std::cout << out << "\n"; });
    });

    auto* array = perm_cmd->add_subcommand("array", "One-line notation on 0..size-1");
    array->fallthrough();
    array->add_option("perm", perm_args.perm, "Permutation in cycle notation")->required();
    auto* array_size = array->add_option("--size", perm_args.size, "Array length");
    array->callback([&] {
        const Perm p = parse_cycles(perm_args.perm);
        const std::vector<Point> values =
            array_size->count() ? p.to_array(perm_args.size) : p.to_array();
        std::vector<std::string> parts;
        for (const Point v : values) parts.push_back(std::to_string(v));
        emit(settings, json{{"array", values}},
             [&parts] { std::cout << join(parts, " ") << "\n"; });
    });

    auto* commutator = perm_cmd->add_subcommand("commutator", "p * q * ~p * ~q");
    commutator->fallthrough();
    commutator->add_option("perm", perm_args.perm, "Left permutation")->required();
    commutator->add_option("other", perm_args.other, "Right permutation")->required();
    commutator->callback([&] {
        const std::string out = to_cycle_text(
            parse_cycles(perm_args.perm).commutator(parse_cycles(perm_args.other)));
        emit(settings, json{{"cycles", out}}, [&out] { std::cout << out << "\n"; });
    });

    auto* random = perm_cmd->add_subcommand("random", "Uniformly random permutation");
    random->fallthrough();
    random->add_option("--size", perm_args.size, "Permutation of 0..size-1")->required();
    auto* random_seed = random->add_option("--seed", perm_args.seed, "Seed for reproducibility");
    random->callback([&] {
        permkit::RandomSource source = random_seed->count()
                                           ? permkit::RandomSource(perm_args.seed)
                                           : permkit::RandomSource::from_entropy();
        const std::string out = to_cycle_text(permkit::random_perm(perm_args.size, source));
        emit(settings, json{{"cycles", out}, {"seed", source.seed()}}, [&] {
            std::cout << out << "\n";
            // Make unseeded runs reproducible after the fact.
            if (!random_seed->count()) std::cerr << "seed: " << source.seed() << "\n";
        });
    });

    // ---- ranking ----
    struct {
        std::string perm;
        std::string rank;
        std::string algo;
        std::uint64_t size = 0;
    } rank_args;

    auto* rank = app.add_subcommand("rank", "Rank of a permutation among size! many");
    rank->fallthrough();
    rank->add_option("perm", rank_args.perm, "Permutation in cycle notation")->required();
    rank->add_option("--algo", rank_args.algo, "Ranking scheme")
        ->check(CLI::IsMember({"lex", "mr"}))
        ->required();
    rank->add_option("--size", rank_args.size, "Permutations of 0..size-1")->required();
    rank->callback([&] {
        const Perm p = parse_cycles(rank_args.perm);
        const Bigint value = rank_args.algo == "lex" ? permkit::rank_lex(p, rank_args.size)
                                                     : permkit::rank_mr(p, rank_args.size);
        const std::string out = value.str();
        emit(settings, json{{"rank", out}}, [&out] { std::cout << out << "\n"; });
    });

    auto* unrank = app.add_subcommand("unrank", "Permutation with the given rank");
    unrank->fallthrough();
    unrank->add_option("rank", rank_args.rank, "Rank, a nonnegative integer")->required();
    unrank->add_option("--algo", rank_args.algo, "Ranking scheme")
        ->check(CLI::IsMember({"lex", "mr"}))
        ->required();
    unrank->add_option("--size", rank_args.size, "Permutations of 0..size-1")->required();
    unrank->callback([&] {
        const Bigint value = parse_bigint(rank_args.rank);
        const Perm p = rank_args.algo == "lex" ? permkit::unrank_lex(rank_args.size, value)
                                               : permkit::unrank_mr(rank_args.size, value);
        const std::string out = to_cycle_text(p);
        emit(settings, json{{"cycles", out}}, [&out] { std::cout << out << "\n"; });
    });

    auto* invvec = app.add_subcommand("invvec", "Inversion vector on 0..size-1");
    invvec->fallthrough();
    invvec->add_option("perm", rank_args.perm, "Permutation in cycle notation")->required();
    invvec->add_option("--size", rank_args.size, "Vector length")->required();
    invvec->callback([&] {
        const std::vector<Point> vec =
            permkit::inversion_vector(parse_cycles(rank_args.perm), rank_args.size);
        std::vector<std::string> parts;
        for (const Point v : vec) parts.push_back(std::to_string(v));
        emit(settings, json{{"inversion_vector", vec}},
             [&parts] { std::cout << join(parts, " ") << "\n"; });
    });

    // ---- group: queries on generated permutation groups ----
    struct {
        std::vector<std::string> generators;
        std::vector<std::string> subgroup;
        std::string points;
        std::uint64_t point = 0;
        std::uint64_t max_order = PermGroup::kDefaultMaxOrder;
        bool lax = false;
    } group_args;

    auto* group_cmd = app.add_subcommand("group", "Queries on generated permutation groups");
    group_cmd->require_subcommand(1);
    group_cmd->fallthrough();
    group_cmd
        ->add_option("--gen", group_args.generators, "Generator in cycle notation, repeatable")
        ->type_size(1)
        ->required();
    group_cmd
        ->add_option("--max-group-order", group_args.max_order,
                     "Give up when a closure exceeds this many elements")
        ->capture_default_str();

    const auto the_group = [&] { return build_group(group_args.generators, group_args.max_order); };

    auto* gorder = group_cmd->add_subcommand("order", "Number of elements");
    gorder->fallthrough();
    gorder->callback([&] {
        const std::size_t out = the_group().order();
        emit(settings, json{{"order", out}}, [out] { std::cout << out << "\n"; });
    });

    auto* gelements = group_cmd->add_subcommand("elements", "All elements, one per line");
    gelements->fallthrough();
    gelements->callback([&] { emit_elements(settings, the_group()); });

    auto* gabelian = group_cmd->add_subcommand("is-abelian", "Whether all elements commute");
    gabelian->fallthrough();
    gabelian->callback([&] {
        const bool out = the_group().is_abelian();
        emit(settings, json{{"is_abelian", out}},
             [out] { std::cout << (out ? "true" : "false") << "\n"; });
    });

    auto* gcenter = group_cmd->add_subcommand("center", "Elements commuting with everything");
    gcenter->fallthrough();
    gcenter->callback([&] { emit_elements(settings, the_group().center()); });

    auto* gderived =
        group_cmd->add_subcommand("derived-series", "Orders along repeated commutator subgroups");
    gderived->fallthrough();
    gderived->callback([&] {
        PermGroup g = the_group();
        std::vector<std::size_t> orders{g.order()};
        while (true) {
            PermGroup derived = permkit::commutator_subgroup(g, g);
            if (derived.order() == g.order()) break;
            orders.push_back(derived.order());
            g = std::move(derived);
        }
        // A group is perfect when it equals its own commutator subgroup,
        // i.e. the very first step of the series does not shrink.
        const bool perfect = orders.size() == 1;
        std::vector<std::string> parts;
        for (const std::size_t n : orders) parts.push_back(std::to_string(n));
        emit(settings, json{{"orders", orders}, {"perfect", perfect}},
             [&parts] { std::cout << join(parts, " ") << "\n"; });
    });

    auto* gorbits = group_cmd->add_subcommand("orbits", "Orbits of a point range");
    gorbits->fallthrough();
    gorbits->add_option("--points", group_args.points, "Half-open range a..b")->required();
    gorbits->callback([&] {
        auto parts = the_group().orbits(parse_point_range(group_args.points));
        std::sort(parts.begin(), parts.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        std::vector<std::string> rendered;
        for (const auto& orbit : parts) {
            std::vector<std::string> nums;
            for (const Point p : orbit) nums.push_back(std::to_string(p));
            rendered.push_back("[" + join(nums, " ") + "]");
        }
        emit(settings, json{{"orbits", parts}},
             [&rendered] { std::cout << join(rendered, " ") << "\n"; });
    });

    auto* gtransitive =
        group_cmd->add_subcommand("is-transitive", "Whether a point range is one orbit");
    gtransitive->fallthrough();
    gtransitive->add_option("--points", group_args.points, "Half-open range a..b")->required();
    gtransitive->add_flag("--lax", group_args.lax,
                          "Allow fixed points besides a single moved orbit");
    gtransitive->callback([&] {
        const bool out = the_group().is_transitive(parse_point_range(group_args.points),
                                                   !group_args.lax);
        emit(settings, json{{"is_transitive", out}},
             [out] { std::cout << (out ? "true" : "false") << "\n"; });
    });

    auto* gstabilizer = group_cmd->add_subcommand("stabilizer", "Elements fixing a point");
    gstabilizer->fallthrough();
    gstabilizer->add_option("--point", group_args.point, "Point to fix")->required();
    gstabilizer->callback(
        [&] { emit_elements(settings, the_group().stabilizer(group_args.point)); });

    auto* gnormalizer =
        group_cmd->add_subcommand("normalizer", "Elements conjugating a subgroup into itself");
    gnormalizer->fallthrough();
    gnormalizer
        ->add_option("--sub", group_args.subgroup, "Subgroup generator, repeatable")
        ->type_size(1)
        ->required();
    gnormalizer->callback([&] {
        const PermGroup h = build_group(group_args.subgroup, group_args.max_order);
        emit_elements(settings, the_group().normalizer(h));
    });

    auto* gcentralizer =
        group_cmd->add_subcommand("centralizer", "Elements commuting with a subgroup");
    gcentralizer->fallthrough();
    gcentralizer
        ->add_option("--sub", group_args.subgroup, "Subgroup generator, repeatable")
        ->type_size(1)
        ->required();
    gcentralizer->callback([&] {
        const PermGroup h = build_group(group_args.subgroup, group_args.max_order);
        emit_elements(settings, the_group().centralizer(h));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const permkit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const permkit::MalformedCycle& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const permkit::PermError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
