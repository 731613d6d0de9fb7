#include "sidon/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "sidon/constructions.hpp"
#include "sidon/core.hpp"
#include "sidon/exception_sets.hpp"
#include "sidon/normalization.hpp"
#include "sidon/rational.hpp"

namespace sidon::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view usage_text = R"(Usage: sidon <command> [options]

Commands:
  image        image of A under a linear form, with a Sidon verdict
  check        Sidon decision at a given order, with a collision witness
  exceptions   all failing coefficients c for x1 + c*x2 on A
  hyperplanes  h-ary exception locus as primitive difference vectors
  construct    build a form that is guaranteed Sidon on A
  normalize    affine-map A onto a set containing 0 and 1

Options:
  --set LIST      comma-separated rationals, e.g. "0,1,5/2"
  --form LIST     comma-separated nonzero coefficients, e.g. "1,-2/3"
  --order N       Sidon order for check (default 1)
  --method NAME   enumerate | formula | both (exceptions; default enumerate)
  --arity H       number of variables (hyperplanes, construct)
  --kind NAME     growth | gadic (construct)
  --g N           base for the gadic construction (default max(A)+1)
  --a0 R, --a1 R  anchor elements for normalize (default: two smallest)
  --json          emit a single JSON document on stdout
  --max-tuples N  enumeration budget (default 10000000)
  -h, --help      show this message

Exit codes: 0 success, 1 parse or domain error, 2 internal mismatch.
)";

struct Options {
    std::string command;
    std::map<std::string, std::string> values;
    bool json = false;
    bool help = false;
    std::uint64_t max_tuples = default_tuple_limit;
};

std::uint64_t parse_count(const std::string& flag, const std::string& text) {
    // stoull accepts a leading '-' and wraps it, so insist on digits.
    const bool digits_only =
        !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char ch) {
            return std::isdigit(ch) != 0;
        });
    if (digits_only) {
        try {
            std::size_t used = 0;
            const std::uint64_t value = std::stoull(text, &used);
            if (used == text.size()) return value;
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("invalid value '" + text + "' for " + flag);
}

Options parse_options(const std::vector<std::string>& args) {
    static const std::set<std::string> valued = {"--set",  "--form", "--order", "--method",
                                                 "--arity", "--kind", "--g",     "--a0",
                                                 "--a1",   "--max-tuples"};
    Options options;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "--json") {
            options.json = true;
        } else if (arg == "-h" || arg == "--help") {
            options.help = true;
        } else if (valued.contains(arg)) {
            if (i + 1 >= args.size()) {
                throw std::invalid_argument("option " + arg + " needs a value");
            }
            options.values[arg.substr(2)] = args[++i];
        } else if (arg.starts_with("-") && arg.size() > 1 && !std::isdigit(static_cast<unsigned char>(arg[1]))) {
            throw std::invalid_argument("unknown option '" + arg + "'");
        } else if (options.command.empty()) {
            options.command = arg;
        } else {
            throw std::invalid_argument("unexpected argument '" + arg + "'");
        }
    }
    if (auto it = options.values.find("max-tuples"); it != options.values.end()) {
        options.max_tuples = parse_count("--max-tuples", it->second);
    }
    return options;
}

const std::string& require_value(const Options& options, const std::string& key) {
    auto it = options.values.find(key);
    if (it == options.values.end()) {
        throw std::invalid_argument("missing required option --" + key);
    }
    return it->second;
}

std::optional<std::string> find_value(const Options& options, const std::string& key) {
    auto it = options.values.find(key);
    if (it == options.values.end()) return std::nullopt;
    return it->second;
}

std::string_view trimmed(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    return text;
}

std::vector<std::string_view> split_tokens(std::string_view source) {
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = source.find(',', start);
        if (comma == std::string_view::npos) {
            tokens.push_back(trimmed(source.substr(start)));
            return tokens;
        }
        tokens.push_back(trimmed(source.substr(start, comma - start)));
        start = comma + 1;
    }
}

ordered_json rational_strings(const std::vector<Rational>& values) {
    ordered_json array = ordered_json::array();
    for (const Rational& value : values) array.push_back(to_string(value));
    return array;
}

std::string render_tuple(const std::vector<Rational>& tuple) {
    std::string text = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) text += ',';
        text += to_string(tuple[i]);
    }
    return text + ")";
}

bool image_is_sidon(const RationalSet& image_set, std::size_t set_size, std::size_t arity) {
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), set_size, arity);
    return expected == static_cast<unsigned long>(image_set.size());
}

int cmd_image(const Options& options, std::ostream& out) {
    const RationalSet set = parse_set_literal(require_value(options, "set"));
    const LinearForm form = parse_form_literal(require_value(options, "form"));
    const RationalSet img = image(form, set, options.max_tuples);
    std::optional<bool> sidon;
    if (!set.empty()) {
        sidon = image_is_sidon(img, set.size(), form.arity());
    }

    if (options.json) {
        ordered_json doc;
        doc["image"] = rational_strings(img.elements());
        doc["size"] = img.size();
        doc["sidon"] = sidon ? ordered_json(*sidon) : ordered_json(nullptr);
        out << doc.dump() << "\n";
    } else {
        out << "image: " << render_set_literal(img) << "\n";
        out << "size: " << img.size() << "\n";
        if (sidon) out << "sidon: " << (*sidon ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_check(const Options& options, std::ostream& out) {
    const RationalSet set = parse_set_literal(require_value(options, "set"));
    const LinearForm form = parse_form_literal(require_value(options, "form"));
    std::uint64_t order = 1;
    if (auto text = find_value(options, "order")) {
        order = parse_count("--order", *text);
    }
    if (order < 1) {
        throw std::invalid_argument("--order must be at least 1");
    }

    const RepresentationProfile profile = representation_profile(form, set, options.max_tuples);
    const std::uint64_t max_count = profile.max_count();
    const bool sidon = max_count <= order;
    std::optional<CollisionWitness> witness;
    if (!sidon) {
        witness = collision_witness(form, set, options.max_tuples);
    }

    if (options.json) {
        ordered_json doc;
        doc["sidon"] = sidon;
        doc["order"] = order;
        doc["max_count"] = max_count;
        if (witness) {
            ordered_json w;
            w["left"] = rational_strings(witness->left);
            w["right"] = rational_strings(witness->right);
            w["value"] = to_string(witness->value);
            doc["witness"] = w;
        } else {
            doc["witness"] = nullptr;
        }
        out << doc.dump() << "\n";
    } else {
        std::string verdict = sidon ? "SIDON" : "NOT-SIDON";
        if (order > 1) verdict += " (order " + std::to_string(order) + ")";
        out << verdict << "\n";
        out << "max-count: " << max_count << "\n";
        if (witness) {
            out << "witness: phi" << render_tuple(witness->left) << " = phi"
                << render_tuple(witness->right) << " = " << to_string(witness->value) << "\n";
        }
    }
    return 0;
}

int cmd_exceptions(const Options& options, std::ostream& out) {
    const RationalSet set = parse_set_literal(require_value(options, "set"));
    const std::string method = find_value(options, "method").value_or("enumerate");
    if (method != "enumerate" && method != "formula" && method != "both") {
        throw std::invalid_argument("--method must be enumerate, formula or both");
    }

    if (method != "enumerate") {
        if (!set.contains(0) || !set.contains(1)) {
            throw std::invalid_argument(
                "the formula method needs a normalized set containing 0 and 1; "
                "run `normalize` first");
        }
        if (set.size() > 4) {
            throw std::invalid_argument(
                "the formula method covers sets of at most 4 elements; use --method enumerate");
        }
    }

    std::optional<ExceptionSet> enumerated;
    std::optional<ExceptionSet> from_formula;
    if (method != "formula") enumerated = binary_exception_set(set);
    if (method != "enumerate") from_formula = formula_exception_set(set);

    const ExceptionSet& result = enumerated ? *enumerated : *from_formula;
    const bool compared = enumerated && from_formula;
    const bool match = !compared || enumerated->values == from_formula->values;

    if (options.json) {
        ordered_json doc;
        if (match) {
            doc["values"] = rational_strings(result.values.elements());
            doc["count"] = result.values.size();
        } else {
            doc["enumerated"] = rational_strings(enumerated->values.elements());
            doc["formula"] = rational_strings(from_formula->values.elements());
        }
        doc["zero_collides"] = result.zero_collides;
        doc["method"] = method;
        if (compared) doc["match"] = match;
        out << doc.dump() << "\n";
    } else {
        if (match) {
            out << "exceptions: " << render_set_literal(result.values) << "\n";
            out << "count: " << result.values.size() << "\n";
        } else {
            out << "enumerated: " << render_set_literal(enumerated->values) << "\n";
            out << "formula: " << render_set_literal(from_formula->values) << "\n";
        }
        out << "zero-collision: " << (result.zero_collides ? "true" : "false") << "\n";
        if (compared) out << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match ? 0 : 2;
}

int cmd_hyperplanes(const Options& options, std::ostream& out) {
    const RationalSet set = parse_set_literal(require_value(options, "set"));
    const std::uint64_t arity = parse_count("--arity", require_value(options, "arity"));
    const HyperplaneArrangement arrangement =
        exception_arrangement(set, static_cast<std::size_t>(arity), options.max_tuples);

    if (options.json) {
        ordered_json doc;
        doc["arity"] = arrangement.arity();
        ordered_json vectors = ordered_json::array();
        for (const auto& normal : arrangement.vectors()) {
            ordered_json row = ordered_json::array();
            for (const mpz_class& entry : normal) {
                if (entry.fits_slong_p()) {
                    row.push_back(static_cast<std::int64_t>(entry.get_si()));
                } else {
                    row.push_back(entry.get_str());
                }
            }
            vectors.push_back(row);
        }
        doc["vectors"] = vectors;
        out << doc.dump() << "\n";
    } else {
        for (const auto& normal : arrangement.vectors()) {
            out << "(";
            for (std::size_t i = 0; i < normal.size(); ++i) {
                if (i > 0) out << ",";
                out << normal[i].get_str();
            }
            out << ")\n";
        }
    }
    return 0;
}

int cmd_construct(const Options& options, std::ostream& out, std::ostream& err) {
    const RationalSet set = parse_set_literal(require_value(options, "set"));
    const std::string kind = require_value(options, "kind");
    const std::uint64_t arity = parse_count("--arity", require_value(options, "arity"));

    LinearForm form = [&] {
        if (kind == "growth") {
            if (find_value(options, "g")) {
                throw std::invalid_argument("--g applies to the gadic construction only");
            }
            return growth_form(set, static_cast<std::size_t>(arity));
        }
        if (kind == "gadic") {
            std::optional<mpz_class> base;
            if (auto text = find_value(options, "g")) {
                const Rational parsed = parse_rational(*text);
                if (parsed.get_den() != 1) {
                    throw std::invalid_argument("--g must be an integer");
                }
                base = parsed.get_num();
            }
            return g_adic_form(set, static_cast<std::size_t>(arity), base);
        }
        throw std::invalid_argument("--kind must be growth or gadic");
    }();

    // The command re-checks its own output before confirming.
    const bool verified = is_sidon(form, set, options.max_tuples);
    if (!verified) {
        err << "error: constructed form failed its own Sidon check\n";
        return 2;
    }

    if (options.json) {
        ordered_json doc;
        doc["coefficients"] = rational_strings(form.coefficients());
        doc["sidon"] = true;
        out << doc.dump() << "\n";
    } else {
        out << "form: " << render_form_literal(form) << "\n";
        out << "sidon: confirmed\n";
    }
    return 0;
}

int cmd_normalize(const Options& options, std::ostream& out) {
    const RationalSet set = parse_set_literal(require_value(options, "set"));
    const auto anchor0 = find_value(options, "a0");
    const auto anchor1 = find_value(options, "a1");
    if (anchor0.has_value() != anchor1.has_value()) {
        throw std::invalid_argument("--a0 and --a1 must be supplied together");
    }

    const NormalizedSet normalized =
        anchor0 ? normalize_set(set, parse_rational(*anchor0), parse_rational(*anchor1))
                : normalize_set(set);

    if (options.json) {
        ordered_json doc;
        doc["set"] = rational_strings(normalized.set.elements());
        doc["scale"] = to_string(normalized.to_original.scale());
        doc["offset"] = to_string(normalized.to_original.offset());
        out << doc.dump() << "\n";
    } else {
        out << "set: " << render_set_literal(normalized.set) << "\n";
        out << "scale: " << to_string(normalized.to_original.scale()) << "\n";
        out << "offset: " << to_string(normalized.to_original.offset()) << "\n";
    }
    return 0;
}

}  // namespace

RationalSet parse_set_literal(std::string_view source) {
    if (trimmed(source).empty()) {
        return RationalSet();
    }
    std::set<Rational> seen;
    std::vector<Rational> parsed;
    for (std::string_view token : split_tokens(source)) {
        Rational value = parse_rational(token);
        if (!seen.insert(value).second) {
            throw std::invalid_argument("duplicate set element '" + std::string(token) + "'");
        }
        parsed.push_back(std::move(value));
    }
    return RationalSet(std::move(parsed));
}

LinearForm parse_form_literal(std::string_view source) {
    if (trimmed(source).empty()) {
        throw std::invalid_argument("a form needs at least one coefficient");
    }
    std::vector<Rational> coefficients;
    for (std::string_view token : split_tokens(source)) {
        Rational value = parse_rational(token);
        if (value == 0) {
            throw std::invalid_argument("zero coefficient '" + std::string(token) +
                                        "' (coefficients must be nonzero)");
        }
        coefficients.push_back(std::move(value));
    }
    return LinearForm(std::move(coefficients));
}

std::string render_set_literal(const RationalSet& a) {
    std::string text;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0) text += ',';
        text += to_string(a.elements()[i]);
    }
    return text;
}

std::string render_form_literal(const LinearForm& form) {
    std::string text;
    for (std::size_t i = 0; i < form.arity(); ++i) {
        if (i > 0) text += ',';
        text += to_string(form.coefficients()[i]);
    }
    return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options options;
    try {
        options = parse_options(args);
    } catch (const std::exception& error) {
        err << "error: " << error.what() << "\n";
        return 1;
    }

    if (options.help) {
        out << usage_text;
        return 0;
    }
    if (options.command.empty()) {
        err << usage_text;
        return 1;
    }

    try {
        if (options.command == "image") return cmd_image(options, out);
        if (options.command == "check") return cmd_check(options, out);
        if (options.command == "exceptions") return cmd_exceptions(options, out);
        if (options.command == "hyperplanes") return cmd_hyperplanes(options, out);
        if (options.command == "construct") return cmd_construct(options, out, err);
        if (options.command == "normalize") return cmd_normalize(options, out);
        err << "error: unknown command '" << options.command << "'\n";
        return 1;
    } catch (const std::exception& error) {
        err << "error: " << error.what() << "\n";
        return 1;
    }
}

}  // namespace sidon::cli
