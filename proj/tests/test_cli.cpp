#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "sidon/cli.hpp"
#include "test_support.hpp"

using nlohmann::json;
using sidon::cli::parse_form_literal;
using sidon::cli::parse_set_literal;
using sidon::cli::render_form_literal;
using sidon::cli::render_set_literal;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult call(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = sidon::cli::run(args, out, err);
    return CliResult{code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("set and form literals") {
    CHECK(parse_set_literal("0,1,3") == testsupport::set_of({0, 1, 3}));
    CHECK(parse_set_literal("3, 0 ,1") == testsupport::set_of({0, 1, 3}));
    CHECK(parse_set_literal("").empty());
    CHECK(parse_set_literal("  ").empty());
    CHECK(parse_set_literal("-1/2").size() == 1);
    CHECK_THROWS_WITH(parse_set_literal("1,2/2"), doctest::Contains("2/2"));
    CHECK_THROWS_WITH(parse_set_literal("0,x"), doctest::Contains("x"));
    CHECK_THROWS_AS(parse_set_literal("1,,2"), std::invalid_argument);

    CHECK(parse_form_literal("1,-2/3") == sidon::LinearForm({sidon::Rational(1), testsupport::make_rational(-2, 3)}));
    CHECK_THROWS_WITH(parse_form_literal("1,0/3"), doctest::Contains("0/3"));
    CHECK_THROWS_AS(parse_form_literal(""), std::invalid_argument);
}

TEST_CASE("literal render/parse round trip") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 50; ++i) {
        const auto a = testsupport::random_set(rng, 1, 6, 50, 20);
        CHECK(parse_set_literal(render_set_literal(a)) == a);
        const auto form = testsupport::random_form(rng, 1 + rng() % 4, 30, 10);
        CHECK(parse_form_literal(render_form_literal(form)) == form);
    }
    CHECK(render_set_literal(sidon::RationalSet()).empty());
}

TEST_CASE("cli image") {
    const auto text = call({"image", "--set", "0,1", "--form", "1,2"});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "image: 0,1,2,3\n"));
    CHECK(contains(text.out, "size: 4\n"));
    CHECK(contains(text.out, "sidon: true\n"));

    const auto collision = call({"image", "--set", "0,1", "--form", "1,1"});
    CHECK(collision.code == 0);
    CHECK(contains(collision.out, "image: 0,1,2\n"));
    CHECK(contains(collision.out, "sidon: false\n"));

    const auto parsed = json::parse(call({"image", "--set", "0,1", "--form", "1,2", "--json"}).out);
    CHECK(parsed["image"] == json::array({"0", "1", "2", "3"}));
    CHECK(parsed["size"] == 4);
    CHECK(parsed["sidon"] == true);
}

TEST_CASE("cli image of the empty set") {
    const auto text = call({"image", "--set", "", "--form", "1,1"});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "image: 0\n"));
    CHECK(contains(text.out, "size: 1\n"));
    CHECK_FALSE(contains(text.out, "sidon"));

    const auto parsed = json::parse(call({"image", "--set", "", "--form", "1,1", "--json"}).out);
    CHECK(parsed["sidon"].is_null());
}

TEST_CASE("cli check") {
    const auto failing = call({"check", "--set", "0,1", "--form", "1,1"});
    CHECK(failing.code == 0);
    CHECK(contains(failing.out, "NOT-SIDON\n"));
    CHECK(contains(failing.out, "max-count: 2\n"));
    CHECK(contains(failing.out, "witness: phi(0,1) = phi(1,0) = 1\n"));

    const auto order_two = call({"check", "--set", "0,1", "--form", "1,1", "--order", "2"});
    CHECK(order_two.code == 0);
    CHECK(contains(order_two.out, "SIDON (order 2)\n"));

    const auto passing = call({"check", "--set", "1,2,3", "--form", "1,4"});
    CHECK(passing.code == 0);
    CHECK(contains(passing.out, "SIDON\n"));
    CHECK(contains(passing.out, "max-count: 1\n"));

    const auto parsed =
        json::parse(call({"check", "--set", "0,1", "--form", "1,1", "--json"}).out);
    CHECK(parsed["sidon"] == false);
    CHECK(parsed["order"] == 1);
    CHECK(parsed["max_count"] == 2);
    CHECK(parsed["witness"]["left"] == json::array({"0", "1"}));
    CHECK(parsed["witness"]["right"] == json::array({"1", "0"}));
    CHECK(parsed["witness"]["value"] == "1");

    CHECK(call({"check", "--set", "", "--form", "1,1"}).code == 1);
    CHECK(call({"check", "--set", "0,1", "--form", "1,1", "--order", "0"}).code == 1);
}

TEST_CASE("cli exceptions") {
    const auto both = call({"exceptions", "--set", "0,1", "--method", "both"});
    CHECK(both.code == 0);
    CHECK(contains(both.out, "exceptions: -1,1\n"));
    CHECK(contains(both.out, "count: 2\n"));
    CHECK(contains(both.out, "zero-collision: true\n"));
    CHECK(contains(both.out, "MATCH\n"));

    const auto three = call({"exceptions", "--set", "0,1,3", "--method", "both"});
    CHECK(three.code == 0);
    CHECK(contains(three.out, "count: 14\n"));
    CHECK(contains(three.out, "MATCH\n"));

    // Default method is plain enumeration, which has no normalization demand.
    const auto unnormalized = call({"exceptions", "--set", "2,5,11"});
    CHECK(unnormalized.code == 0);
    CHECK(contains(unnormalized.out, "count: 14\n"));

    const auto needs_normalize = call({"exceptions", "--set", "2,5,11", "--method", "formula"});
    CHECK(needs_normalize.code == 1);
    CHECK(contains(needs_normalize.err, "normalize"));

    const auto too_big = call({"exceptions", "--set", "0,1,2,3,4", "--method", "formula"});
    CHECK(too_big.code == 1);

    CHECK(call({"exceptions", "--set", "5"}).code == 1);
    CHECK(call({"exceptions", "--set", "0,1", "--method", "bogus"}).code == 1);

    const auto parsed = json::parse(call({"exceptions", "--set", "0,1", "--method", "both", "--json"}).out);
    CHECK(parsed["values"] == json::array({"-1", "1"}));
    CHECK(parsed["zero_collides"] == true);
    CHECK(parsed["match"] == true);
}

TEST_CASE("cli hyperplanes") {
    const auto text = call({"hyperplanes", "--set", "0,1", "--arity", "2"});
    CHECK(text.code == 0);
    CHECK(text.out == "(0,1)\n(1,-1)\n(1,0)\n(1,1)\n");

    const auto parsed =
        json::parse(call({"hyperplanes", "--set", "0,1", "--arity", "2", "--json"}).out);
    CHECK(parsed["arity"] == 2);
    CHECK(parsed["vectors"] ==
          json::array({{0, 1}, {1, -1}, {1, 0}, {1, 1}}));

    const auto ternary = json::parse(
        call({"hyperplanes", "--set", "0,1", "--arity", "3", "--json"}).out);
    CHECK(ternary["vectors"].size() == 13);

    CHECK(call({"hyperplanes", "--set", "0,1"}).code == 1);  // missing --arity
    CHECK(call({"hyperplanes", "--set", "5", "--arity", "2"}).code == 1);
}

TEST_CASE("cli construct") {
    const auto growth = call({"construct", "--set", "0,1,4", "--kind", "growth", "--arity", "3"});
    CHECK(growth.code == 0);
    CHECK(contains(growth.out, "form: 1,5,25\n"));
    CHECK(contains(growth.out, "sidon: confirmed\n"));

    const auto gadic = call({"construct", "--set", "1,2,3", "--kind", "gadic", "--arity", "2"});
    CHECK(gadic.code == 0);
    CHECK(contains(gadic.out, "form: 1,4\n"));

    const auto with_base =
        call({"construct", "--set", "1,2,3", "--kind", "gadic", "--arity", "3", "--g", "5"});
    CHECK(with_base.code == 0);
    CHECK(contains(with_base.out, "form: 1,5,25\n"));

    const auto parsed = json::parse(
        call({"construct", "--set", "1,2,3", "--kind", "gadic", "--arity", "2", "--json"}).out);
    CHECK(parsed["coefficients"] == json::array({"1", "4"}));
    CHECK(parsed["sidon"] == true);

    const auto not_positive = call({"construct", "--set", "0,1", "--kind", "gadic", "--arity", "2"});
    CHECK(not_positive.code == 1);
    CHECK(contains(not_positive.err, "positive integers"));

    CHECK(call({"construct", "--set", "1,2,3", "--kind", "gadic", "--arity", "2", "--g", "3"}).code == 1);
    CHECK(call({"construct", "--set", "0,1", "--kind", "growth", "--arity", "2", "--g", "5"}).code == 1);
    CHECK(call({"construct", "--set", "0,1", "--kind", "other", "--arity", "2"}).code == 1);
}

TEST_CASE("cli normalize") {
    const auto text = call({"normalize", "--set", "2,5,11"});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "set: 0,1,3\n"));
    CHECK(contains(text.out, "scale: 3\n"));
    CHECK(contains(text.out, "offset: 2\n"));

    const auto anchored = call({"normalize", "--set", "2,5,11", "--a0", "5", "--a1", "2"});
    CHECK(anchored.code == 0);
    CHECK(contains(anchored.out, "set: -2,0,1\n"));
    CHECK(contains(anchored.out, "scale: -3\n"));
    CHECK(contains(anchored.out, "offset: 5\n"));

    const auto fixed = call({"normalize", "--set", "0,1,7"});
    CHECK(contains(fixed.out, "set: 0,1,7\n"));
    CHECK(contains(fixed.out, "scale: 1\n"));

    CHECK(call({"normalize", "--set", "5"}).code == 1);
    CHECK(call({"normalize", "--set", "2,5,11", "--a0", "5"}).code == 1);
    CHECK(call({"normalize", "--set", "2,5,11", "--a0", "5", "--a1", "7"}).code == 1);
}

TEST_CASE("cli surface errors") {
    const auto no_args = call({});
    CHECK(no_args.code == 1);
    CHECK(contains(no_args.err, "Usage"));

    const auto help = call({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "Usage"));

    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({"image", "--set", "0,1"}).code == 1);  // missing --form
    CHECK(call({"image", "--set", "0,1", "--form", "1,2", "--bogus"}).code == 1);
    CHECK(call({"image", "--set"}).code == 1);  // dangling value

    const auto parse_error = call({"image", "--set", "0,abc", "--form", "1"});
    CHECK(parse_error.code == 1);
    CHECK(contains(parse_error.err, "abc"));

    const auto budget = call({"image", "--set", "0,1,2,3", "--form", "1,2,4,8",
                              "--max-tuples", "10"});
    CHECK(budget.code == 1);
    CHECK(contains(budget.err, "exceeds"));
}
