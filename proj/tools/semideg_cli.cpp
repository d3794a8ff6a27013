#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semideg/api.hpp"
#include "semideg/config.hpp"
#include "semideg/errors.hpp"

using namespace semideg;
using semideg::io::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact geometry of compactifications of the affine plane"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1, maxcyc = 360;
  app.add_option("--threads", threads, "worker cap for enumeration");
  app.add_option("--max-cyclotomic", maxcyc,
                 "cap on the cyclotomic order of the coefficient field");

  std::string sfile, afile, bfile, dtext, boxtext, fexpr, ffile;
  long bound = 0;

  auto add_s = [&](CLI::App* c) {
    c->add_option("-s,--surface", sfile, "surface file")->required();
  };
  auto add_d = [&](CLI::App* c) {
    c->add_option("-d,--degree", dtext, "divisor class, comma-separated")
        ->required();
  };

  auto* c_classify = app.add_subcommand("classify", "classify the surface");
  add_s(c_classify);
  auto* c_keyforms = app.add_subcommand("keyforms", "key forms per semidegree");
  add_s(c_keyforms);
  auto* c_delta = app.add_subcommand("delta", "evaluate the semidegrees");
  add_s(c_delta);
  c_delta->add_option("-f,--poly", fexpr, "polynomial expression");
  c_delta->add_option("--poly-file", ffile, "polynomial JSON file");
  auto* c_dim = app.add_subcommand("dim", "dimension of the section space");
  add_s(c_dim);
  add_d(c_dim);
  auto* c_basis = app.add_subcommand("basis", "monomial basis of sections");
  add_s(c_basis);
  add_d(c_basis);
  auto* c_enr = app.add_subcommand("enriques", "Enriques semigroup membership");
  add_s(c_enr);
  add_d(c_enr);
  auto* c_bpf =
      app.add_subcommand("zariski-bpf", "base-point-freeness at infinity");
  add_s(c_bpf);
  add_d(c_bpf);
  auto* c_mem = app.add_subcommand("zariski-member",
                                   "bounded Zariski semigroup membership");
  add_s(c_mem);
  add_d(c_mem);
  c_mem->add_option("--bound", bound, "box bound for the search")->required();
  auto* c_trop = app.add_subcommand("tropical", "tropical closure in a box");
  add_s(c_trop);
  c_trop->add_option("--box", boxtext, "box sides, comma-separated")
      ->required();
  c_trop->add_option("-d,--degree", dtext, "test one class for membership");
  auto* c_cmp = app.add_subcommand("compare-equisingular",
                                   "compare two equisingular branches");
  c_cmp->add_option("-a,--first", afile, "first branch file")->required();
  c_cmp->add_option("-b,--second", bfile, "second branch file")->required();
  c_cmp->add_option("--box", boxtext, "spot-check box, comma-separated")
      ->required();
  auto* c_fb = app.add_subcommand(
      "from-branch", "explicit surface file of a one-place branch");
  add_s(c_fb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  config().threads = threads;
  config().max_cyclotomic = maxcyc;

  try {
    auto deg = [&] { return io::parse_int_vector(dtext); };
    if (c_classify->parsed()) {
      emit(api::classify_op(read_file(sfile)));
    } else if (c_keyforms->parsed()) {
      emit(api::keyforms_op(read_file(sfile)));
    } else if (c_delta->parsed()) {
      if (fexpr.empty() == ffile.empty())
        throw InputError("exactly one of -f/--poly-file is required");
      LaurentPoly2 f = !fexpr.empty()
                           ? io::parse_poly_expr(fexpr)
                           : io::parse_poly(json::parse(read_file(ffile)), "$");
      emit(api::delta_op(read_file(sfile), f));
    } else if (c_dim->parsed()) {
      emit(api::dim_op(read_file(sfile), deg()));
    } else if (c_basis->parsed()) {
      emit(api::basis_op(read_file(sfile), deg()));
    } else if (c_enr->parsed()) {
      emit(api::enriques_op(read_file(sfile), deg()));
    } else if (c_bpf->parsed()) {
      emit(api::bpf_op(read_file(sfile), deg()));
    } else if (c_mem->parsed()) {
      emit(api::member_op(read_file(sfile), deg(), bound));
    } else if (c_trop->parsed()) {
      auto box = io::parse_int_vector(boxtext);
      if (dtext.empty()) {
        emit(api::tropical_op(read_file(sfile), box, nullptr));
      } else {
        auto d = deg();
        emit(api::tropical_op(read_file(sfile), box, &d));
      }
    } else if (c_cmp->parsed()) {
      emit(api::compare_op(read_file(afile), read_file(bfile),
                           io::parse_int_vector(boxtext)));
    } else if (c_fb->parsed()) {
      std::cout << api::from_branch_op(read_file(sfile));
    }
  } catch (const Error& e) {
    emit(json{{"error", json{{"code", e.code()}, {"message", e.what()}}}});
    return 1;
  }
  return 0;
}
