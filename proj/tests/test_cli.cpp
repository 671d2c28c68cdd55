#include "skeletal/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = skeletal::cli::run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("map-k mirrors the documented rational example") {
    const auto result = run_cli({"map-k", "--n", "2", "--m", "3/2", "--c", "1/2", "--from", "1",
                                 "--to", "0", "--g", "[1/2,2]"});
    CHECK(result.code == 0);
    CHECK(result.out == "{\"g\":[\"-1\",\"1/2\"]}\n");
}

TEST_CASE("count emits per-k counts") {
    const auto result = run_cli({"count", "--n", "3", "--m", "1", "--c", "1", "--family", "both"});
    CHECK(result.code == 0);
    const auto j = skeletal::Json::parse(result.out);
    CHECK(j["skv"]["per_k"] == skeletal::Json::array({"5", "5", "5"}));
    CHECK(j["skv"]["match"] == true);
    CHECK(j["skf"]["per_k"] == skeletal::Json::array({"16", "16", "16"}));
    CHECK(j["skf"]["formula"] == "16");
}

TEST_CASE("count sweeps a grid as CSV") {
    const auto result = run_cli({"count", "--grid", "n=2,m=1,c=2"});
    CHECK(result.code == 0);
    std::istringstream lines(result.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,m,c,k,count,formula,match");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find("true") != std::string::npos);
    }
    CHECK(rows == 2 * 2 * 2 + 2 * 2);  // (n,m,c,k) cells: n=1 has one k, n=2 has two
}

TEST_CASE("enumerate lists step words") {
    const auto result =
        run_cli({"enumerate", "--family", "skv", "--n", "3", "--m", "1", "--c", "1", "--k", "2",
                 "--ascii"});
    CHECK(result.code == 0);
    CHECK(result.out == "NENENE\nNENNEE\nNNEENE\nNNENEE\nNNNEEE\n");

    const auto json_result = run_cli(
        {"enumerate", "--family", "skv", "--n", "3", "--m", "1", "--c", "1", "--k", "2"});
    std::istringstream lines(json_result.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        CHECK_NOTHROW(skeletal::Json::parse(line));
    }
    CHECK(count == 5);
}

TEST_CASE("enumerate rejects rational mode") {
    const auto result = run_cli({"enumerate", "--family", "skv", "--n", "2", "--m", "3/2", "--c",
                                 "1/2", "--k", "0"});
    CHECK(result.code == 1);
    CHECK(result.err.find("error") != std::string::npos);
}

TEST_CASE("canonicalize emits the representative and offset") {
    const auto dyck = run_cli({"canonicalize", "--n", "3", "--m", "1", "--c", "1", "--g",
                               "[0,1,2]"});
    CHECK(dyck.code == 0);
    const auto j = skeletal::Json::parse(dyck.out);
    CHECK(j["g"] == skeletal::Json::array({"1", "2", "3"}));
    CHECK(j["offset"] == -3);

    const auto walk = run_cli({"canonicalize", "--n", "2", "--m", "3/2", "--c", "1/2", "--g",
                               "[1/2,2]", "--class"});
    CHECK(walk.code == 0);
    CHECK(skeletal::Json::parse(walk.out).size() == 4);

    const auto krep = run_cli({"canonicalize", "--n", "2", "--m", "3/2", "--c", "1/2", "--g",
                               "[1/2,2]", "--k", "0"});
    CHECK(skeletal::Json::parse(krep.out)["g"] == skeletal::Json::array({"-1", "1/2"}));
}

TEST_CASE("map-fn-k maps the function fixture") {
    const auto result =
        run_cli({"map-fn-k", "--n", "12", "--m", "2", "--c", "6", "--from", "7", "--to", "4",
                 "--f", "[4,12,6,1,12,16,1,1,16,17,1,16]"});
    CHECK(result.code == 0);
    const auto j = skeletal::Json::parse(result.out);
    CHECK(j["f"] == skeletal::Json::array({"22", "0", "24", "19", "0", "4", "19", "19", "4", "5",
                                           "19", "4"}));
}

TEST_CASE("chip verbs") {
    const auto fired = run_cli({"chip", "fire", "--m", "2", "--c", "4", "--set", "5", "--d",
                                "[4,1,5,5,14,8]"});
    CHECK(fired.code == 0);
    CHECK(skeletal::Json::parse(fired.out)["D"] ==
          skeletal::Json::array({"6", "3", "7", "7", "0", "10"}));

    const auto borrowed = run_cli({"chip", "borrow", "--m", "2", "--c", "4", "--set", "1,2,3,4",
                                   "--d", "[4,1,5,5,14,8]"});
    CHECK(skeletal::Json::parse(borrowed.out)["D"] ==
          skeletal::Json::array({"12", "9", "13", "13", "6", "0"}));

    const auto checked = run_cli({"chip", "check", "--m", "1", "--c", "1", "--k", "2",
                                  "--method", "both", "--d", "[0,1,1]"});
    CHECK(checked.code == 0);
    const auto j = skeletal::Json::parse(checked.out);
    CHECK(j["skeletal"] == true);
    CHECK(j["skeletal_naive"] == true);

    const auto bad = run_cli({"chip", "fire", "--m", "2", "--c", "4", "--set", "9", "--d",
                              "[4,1,5,5,14,8]"});
    CHECK(bad.code == 1);
}

TEST_CASE("first-return verbs") {
    const std::string pi = "NNEEEENNENEEENNEEENEEEEEE";
    const std::string omega = "NNEEEEEENNENEEEENNEEENEEE";
    const auto phi_result =
        run_cli({"first-return", "phi", "--m", "2", "--k", "1", "--path", pi});
    CHECK(phi_result.code == 0);
    CHECK(phi_result.out == omega + "\n");
    const auto psi_result =
        run_cli({"first-return", "psi", "--m", "2", "--k", "1", "--path", omega});
    CHECK(psi_result.out == pi + "\n");
    CHECK(run_cli({"first-return", "phi", "--m", "2", "--k", "9", "--path", pi}).code == 1);
}

TEST_CASE("poly emits coefficient lists") {
    const auto result = run_cli({"poly", "--family", "skv", "--n", "3", "--m", "1", "--c", "1",
                                 "--k", "2", "--stat", "indicator-dinv"});
    CHECK(result.code == 0);
    CHECK(skeletal::Json::parse(result.out)["coeffs"] ==
          skeletal::Json::array({"1", "2", "1", "1"}));

    const auto labeled = run_cli({"poly", "--family", "skf", "--n", "3", "--m", "1", "--c", "1",
                                  "--k", "0", "--stat", "labeled-dinv"});
    CHECK(labeled.code == 0);
    CHECK(run_cli({"poly", "--family", "skv", "--n", "3", "--m", "1", "--c", "2", "--k", "0",
                   "--stat", "indicator-dinv"})
              .code == 1);
}

TEST_CASE("render draws or errors by mode") {
    const auto grid = run_cli({"render", "--n", "3", "--m", "1", "--c", "1", "--x", "[0,1,2]"});
    CHECK(grid.code == 0);
    CHECK(grid.out == "..._+\n..|+\n.|+\n|+\n");

    const auto word = run_cli(
        {"render", "--n", "3", "--m", "1", "--c", "1", "--x", "[0,1,2]", "--word"});
    CHECK(word.out == "NENENE\n");

    const auto rational = run_cli({"render", "--n", "2", "--m", "3/2", "--c", "1/2", "--x",
                                   "[0,1]"});
    CHECK(rational.code == 1);
    const auto forced = run_cli({"render", "--n", "3", "--m", "1", "--c", "1", "--mode", "Q",
                                 "--x", "[0,1,2]"});
    CHECK(forced.code == 1);
}

TEST_CASE("inputs can come from stdin or files") {
    const auto from_stdin = run_cli({"map-k", "--n", "2", "--m", "3/2", "--c", "1/2", "--from",
                                     "1", "--to", "0", "--g", "-"},
                                    "{\"g\":[\"1/2\",\"2\"]}");
    CHECK(from_stdin.code == 0);
    CHECK(from_stdin.out == "{\"g\":[\"-1\",\"1/2\"]}\n");

    const std::string path = "/tmp/skeletal_cli_test_input.json";
    {
        std::ofstream file(path);
        file << "[1/2, 2]";
    }
    const auto from_file = run_cli({"map-k", "--n", "2", "--m", "3/2", "--c", "1/2", "--from",
                                    "1", "--to", "0", "--g", "@" + path});
    CHECK(from_file.out == "{\"g\":[\"-1\",\"1/2\"]}\n");
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"no-such-verb"}).code == 2);
    CHECK(run_cli({"map-k", "--n", "2"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    // domain error: the input vector is not 1-skeletal
    const auto bad =
        run_cli({"map-k", "--n", "2", "--m", "3/2", "--c", "1/2", "--from", "1", "--to", "0",
                 "--g", "[2,2]"});
    CHECK(bad.code == 1);
    CHECK_NOTHROW(skeletal::Json::parse(bad.err));
}

TEST_CASE("JSON schemas round trip") {
    using namespace skeletal;
    const Params params = params_q(3, Scalar(3, 2), Scalar(1, 2));
    const Path p{{Scalar(0), Scalar(1, 2), Scalar(2)}};
    const auto [p2, params2] = path_from_json(path_to_json(p, params));
    CHECK(p2 == p);
    CHECK(params2.mode == GroupMode::Rationals);
    CHECK(params2.m == params.m);

    const AreaVector g{{Scalar(1), Scalar(2), Scalar(1)}};
    CHECK(area_vector_from_json(area_vector_to_json(g)) == g);

    const FnTable f{{Scalar(1, 2), Scalar(0), Scalar(3)}};
    CHECK(fn_from_json(fn_to_json(f)) == f);

    const LabeledPath lp{g, {2, 1, 3}};
    CHECK(labeled_path_from_json(labeled_path_to_json(lp)) == lp);

    const ChipConfig D{{Scalar(4), Scalar(1), Scalar(14)}};
    CHECK(chip_from_json(chip_to_json(D)) == D);

    const Poly poly{{BigInt(1), BigInt(0), BigInt(99)}};
    CHECK(poly_from_json(poly_to_json(poly)) == poly);

    CHECK_THROWS_AS(params_from_json(Json{{"n", 2}, {"m", "1"}, {"c", "1"}, {"mode", "R"}}),
                    std::domain_error);
}

TEST_CASE("identical invocations produce identical bytes") {
    const std::vector<std::string> args{"enumerate", "--family", "skf", "--n", "3", "--m", "1",
                                        "--c", "1", "--k", "1"};
    CHECK(run_cli(args).out == run_cli(args).out);
}
