#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chowring/app/cli.hpp"

using chowring::app::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("m01 as LaTeX") {
  const auto r = call({"m01", "--format", "latex"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\\mathbb{Z}[c_{1}, c_{2}, c_{3}]/\\left(4c_{3}, 2c_{1}c_{3}, c_{1}^{2}c_{3}\\right)") !=
        std::string::npos);
}

TEST_CASE("orthogonal as JSON") {
  const auto r = call({"orthogonal", "--n", "4", "--k", "1", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("kind") == "presentation");
  CHECK(j.at("simplified") == nlohmann::json::array({"2*c1", "c1^2", "2*c3", "c1*c3"}));
  CHECK(j.at("verified") == true);
}

TEST_CASE("usage errors exit 1") {
  CHECK(call({"quadrics", "--n", "2", "--k", "5", "--max-degree", "2"}).code == 1);
  CHECK(call({"quadrics", "--n", "2", "--k", "5", "--max-degree", "3"}).code == 0);
  CHECK(call({}).code == 1);
  CHECK(call({"bogus"}).code == 1);
  CHECK(call({"quadrics", "--n", "3"}).code == 1);
  CHECK(call({"quadrics", "--n", "1", "--k", "0"}).code == 1);
  CHECK(call({"orthogonal", "--n", "3", "--k", "-1"}).code == 1);
  CHECK(call({"m01", "--format", "yaml"}).code == 1);
  CHECK(call({"m01", "--max-degree", "5"}).code == 1);
  CHECK(call({"pushforward", "--n", "3", "--r", "3"}).code == 1);
  CHECK(call({"orthogonal", "--n", "7", "--k", "1"}).code == 1);
  CHECK(call({"orthogonal", "--n", "3", "--k", "6"}).code == 1);
  const auto r = call({"orthogonal", "--n", "3", "--k", "9", "--force"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(call({"quadrics", "--n", "2", "--k", "5", "--max-degree", "2"}).err.find("usage:") != std::string::npos);
}

TEST_CASE("pushforward command") {
  const auto r = call({"pushforward", "--n", "3", "--r", "0", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("class") == "-4*c1*c2 + 4*c3 + 4*c1^2*H + 4*c2*H - 8*c1*H^2 + 4*H^3");
  CHECK(j.at("closed_form_agrees") == true);
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"m01", "--format", "json"}, {"quadrics", "--n", "3", "--k", "2", "--format", "json"},
           {"orthogonal", "--n", "5", "--k", "3"}, {"pushforward", "--n", "4", "--r", "1", "--format", "latex"}}) {
    CHECK(call(args).out == call(args).out);
  }
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "chowring_cli_out.tex";
  std::filesystem::remove(path);
  const auto r = call({"m01", "--format", "latex", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == call({"m01", "--format", "latex"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("format defaults come from the environment") {
  setenv(chowring::app::kFormatEnv, "json", 1);
  const auto r = call({"m01"});
  CHECK(nlohmann::json::parse(r.out).at("kind") == "presentation");
  CHECK(call({"m01", "--format", "text"}).out.rfind("ring:", 0) == 0);
  setenv(chowring::app::kFormatEnv, "nonsense", 1);
  CHECK(call({"m01"}).code == 1);
  unsetenv(chowring::app::kFormatEnv);
  CHECK(call({"m01"}).out.rfind("ring:", 0) == 0);
}
