// Copyright 2026 The scheme-explorer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scheme_explorer.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "schemex/presented.hpp"
#include "schemex/proj.hpp"
#include "schemex/runner.hpp"
#include "schemex/spectrum.hpp"

struct scx_algebra {
  schemex::PresentedAlgebra value;
};

struct scx_graded {
  schemex::GradedAlgebra value;
};

namespace {

thread_local std::string last_error;

scx_status to_status(schemex::ErrorCode c) { return static_cast<scx_status>(static_cast<int>(c) + 1); }

// Runs f, translating exceptions into status codes.
template <class F>
scx_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return SCX_OK;
  } catch (const schemex::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return SCX_ERR_INTERNAL;
  }
}

scx_status null_argument() {
  last_error = "null argument";
  return SCX_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* scx_version(void) { return "0.1.0"; }

const char* scx_status_name(scx_status status) {
  if (status == SCX_OK) return "Ok";
  if (status == SCX_ERR_INTERNAL) return "Internal";
  int k = static_cast<int>(status) - 1;
  if (k < 0 || k > static_cast<int>(schemex::ErrorCode::SyntaxError)) return "Unknown";
  // error_code_name returns views into static storage
  return schemex::error_code_name(static_cast<schemex::ErrorCode>(k)).data();
}

const char* scx_last_error(void) { return last_error.c_str(); }

void scx_string_free(char* s) { std::free(s); }

scx_run_options scx_default_run_options(void) {
  schemex::RunOptions o;
  return scx_run_options{o.json ? 1 : 0, o.bound, o.seed};
}

scx_status scx_run_script(const char* source, const scx_run_options* options, char** output, int* exit_code) {
  if (!source || !output || !exit_code) return null_argument();
  return guarded([&] {
    schemex::RunOptions o;
    if (options) {
      o.json = options->json != 0;
      o.bound = options->bound;
      o.seed = options->seed;
    }
    schemex::RunResult r = schemex::run_script(source, o);
    *output = copy_string(r.output);
    *exit_code = r.exit_code;
  });
}

scx_status scx_algebra_parse(const char* text, scx_algebra** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new scx_algebra{schemex::parse_algebra(text)}; });
}

void scx_algebra_free(scx_algebra* a) { delete a; }

scx_status scx_algebra_to_string(const scx_algebra* a, char** out) {
  if (!a || !out) return null_argument();
  return guarded([&] { *out = copy_string(a->value.to_string()); });
}

scx_status scx_algebra_specialize(const scx_algebra* a, const char* domain, scx_algebra** out) {
  if (!a || !domain || !out) return null_argument();
  return guarded([&] { *out = new scx_algebra{schemex::specialize(a->value, schemex::parse_domain(domain))}; });
}

scx_status scx_algebra_tensor(const scx_algebra* a, const scx_algebra* b, scx_algebra** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = new scx_algebra{schemex::tensor_product(a->value, b->value).algebra}; });
}

scx_status scx_algebra_is_zero_ring(const scx_algebra* a, int* out) {
  if (!a || !out) return null_argument();
  return guarded([&] { *out = schemex::is_zero_ring(a->value) ? 1 : 0; });
}

scx_status scx_algebra_describe(const scx_algebra* a, char** out) {
  if (!a || !out) return null_argument();
  return guarded([&] { *out = copy_string(schemex::describe_structure(a->value).summary); });
}

scx_status scx_algebra_krull_dimension(const scx_algebra* a, long* value, int* minus_infinity) {
  if (!a || !value || !minus_infinity) return null_argument();
  return guarded([&] {
    schemex::KrullDimension d = schemex::krull_dimension(a->value);
    *value = d.value;
    *minus_infinity = d.minus_infinity ? 1 : 0;
  });
}

scx_status scx_graded_parse(const char* text, scx_graded** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new scx_graded{schemex::parse_graded(text)}; });
}

void scx_graded_free(scx_graded* g) { delete g; }

scx_status scx_graded_point_count(const scx_graded* g, size_t* out) {
  if (!g || !out) return null_argument();
  return guarded([&] { *out = schemex::rational_points(g->value).size(); });
}

scx_status scx_graded_chart_count(const scx_graded* g, size_t* out) {
  if (!g || !out) return null_argument();
  return guarded([&] { *out = schemex::proj_atlas(g->value).size(); });
}

}  // extern "C"
