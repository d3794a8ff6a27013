#pragma once

#include <string>
#include <vector>

#include "semideg/io.hpp"

namespace semideg::api {

using io::json;

// JSON-level operations shared by the CLI and the python bindings; inputs are
// surface-file texts, outputs the documented report objects.
json classify_op(const std::string& surface_text);
json keyforms_op(const std::string& surface_text);
json delta_op(const std::string& surface_text, const LaurentPoly2& f);
json dim_op(const std::string& surface_text, const std::vector<Int>& d);
json basis_op(const std::string& surface_text, const std::vector<Int>& d);
json enriques_op(const std::string& surface_text, const std::vector<Int>& d);
json bpf_op(const std::string& surface_text, const std::vector<Int>& d);
json member_op(const std::string& surface_text, const std::vector<Int>& d,
               long bound);
json tropical_op(const std::string& surface_text, const std::vector<Int>& box,
                 const std::vector<Int>* d);
json compare_op(const std::string& a_text, const std::string& b_text,
                const std::vector<Int>& box);
std::string from_branch_op(const std::string& branch_text);

} // namespace semideg::api
