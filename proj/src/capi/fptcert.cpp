#include "fptcert/fptcert.h"

#include "dispatch.hpp"

#include <new>
#include <string>

struct fptcert_context {
  std::uint32_t magic = 0x66707463;
  fpt::Budgets budgets;
};

struct fptcert_result {
  std::uint32_t magic = 0x72736c74;
  fptcert_status status = FPTCERT_OK;
  std::string json;
  std::string kind;
  std::string message;
};

namespace {

bool valid(const fptcert_context* ctx) { return ctx && ctx->magic == 0x66707463; }
bool valid(const fptcert_result* r) { return r && r->magic == 0x72736c74; }

fptcert_status status_of(fpt::ErrorCategory category) {
  switch (category) {
    case fpt::ErrorCategory::Validation: return FPTCERT_INVALID_INPUT;
    case fpt::ErrorCategory::Hypothesis: return FPTCERT_HYPOTHESIS;
    case fpt::ErrorCategory::Budget: return FPTCERT_BUDGET;
    case fpt::ErrorCategory::Internal: return FPTCERT_INTERNAL;
  }
  return FPTCERT_INTERNAL;
}

void fail(fptcert_result* r, fpt::ErrorKind kind, const std::string& message) {
  r->status = status_of(fpt::error_category(kind));
  r->kind = fpt::error_kind_name(kind);
  r->message = message;
  r->json = fpt::error_json(kind, message).dump();
}

}  // namespace

extern "C" {

const char* fptcert_version(void) { return fpt::kVersion; }

const char* fptcert_status_name(fptcert_status status) {
  switch (status) {
    case FPTCERT_OK: return "ok";
    case FPTCERT_INTERNAL: return "internal";
    case FPTCERT_INVALID_INPUT: return "invalid_input";
    case FPTCERT_HYPOTHESIS: return "hypothesis";
    case FPTCERT_BUDGET: return "budget";
    case FPTCERT_BAD_HANDLE: return "bad_handle";
  }
  return "unknown";
}

fptcert_context* fptcert_context_create(void) { return new (std::nothrow) fptcert_context(); }

void fptcert_context_destroy(fptcert_context* ctx) {
  if (!valid(ctx)) return;
  ctx->magic = 0;
  delete ctx;
}

fptcert_status fptcert_context_set_budget(fptcert_context* ctx, fptcert_budget which, uint64_t value) {
  if (!valid(ctx)) return FPTCERT_BAD_HANDLE;
  switch (which) {
    case FPTCERT_BUDGET_MAX_MULTISETS: ctx->budgets.max_multisets = value; return FPTCERT_OK;
    case FPTCERT_BUDGET_MAX_TERMS: ctx->budgets.max_terms = value; return FPTCERT_OK;
    case FPTCERT_BUDGET_MAX_DIMENSION: ctx->budgets.max_dimension = static_cast<std::size_t>(value); return FPTCERT_OK;
  }
  return FPTCERT_INVALID_INPUT;
}

fptcert_status fptcert_context_get_budget(const fptcert_context* ctx, fptcert_budget which, uint64_t* value) {
  if (!valid(ctx)) return FPTCERT_BAD_HANDLE;
  if (!value) return FPTCERT_INVALID_INPUT;
  switch (which) {
    case FPTCERT_BUDGET_MAX_MULTISETS: *value = ctx->budgets.max_multisets; return FPTCERT_OK;
    case FPTCERT_BUDGET_MAX_TERMS: *value = ctx->budgets.max_terms; return FPTCERT_OK;
    case FPTCERT_BUDGET_MAX_DIMENSION: *value = ctx->budgets.max_dimension; return FPTCERT_OK;
  }
  return FPTCERT_INVALID_INPUT;
}

fptcert_status fptcert_run(fptcert_context* ctx, const char* command, const char* input_json,
                           fptcert_result** out) {
  if (!out) return FPTCERT_INVALID_INPUT;
  *out = nullptr;
  if (!valid(ctx)) return FPTCERT_BAD_HANDLE;
  auto* r = new (std::nothrow) fptcert_result();
  if (!r) return FPTCERT_INTERNAL;
  *out = r;
  try {
    if (!command || !input_json) {
      fail(r, fpt::ErrorKind::Domain, "command and input must not be null");
      return r->status;
    }
    nlohmann::json input;
    try {
      input = nlohmann::json::parse(input_json);
    } catch (const nlohmann::json::parse_error& e) {
      fail(r, fpt::ErrorKind::Syntax, std::string("malformed job JSON: ") + e.what());
      return r->status;
    }
    r->json = fpt::run_command(command, input, ctx->budgets).dump();
    r->status = FPTCERT_OK;
  } catch (const fpt::Error& e) {
    fail(r, e.kind(), e.what());
  } catch (const std::bad_alloc&) {
    fail(r, fpt::ErrorKind::BudgetExceeded, "out of memory");
  } catch (const std::exception& e) {
    fail(r, fpt::ErrorKind::Internal, e.what());
  }
  return r->status;
}

fptcert_status fptcert_result_status(const fptcert_result* result) {
  return valid(result) ? result->status : FPTCERT_BAD_HANDLE;
}

const char* fptcert_result_json(const fptcert_result* result) {
  return valid(result) ? result->json.c_str() : nullptr;
}

const char* fptcert_result_error_kind(const fptcert_result* result) {
  if (!valid(result) || result->status == FPTCERT_OK) return nullptr;
  return result->kind.c_str();
}

const char* fptcert_result_error_message(const fptcert_result* result) {
  if (!valid(result) || result->status == FPTCERT_OK) return nullptr;
  return result->message.c_str();
}

void fptcert_result_destroy(fptcert_result* result) {
  if (!valid(result)) return;
  result->magic = 0;
  delete result;
}

size_t fptcert_command_count(void) { return fpt::commands().size(); }

const char* fptcert_command_name(size_t index) {
  const auto& list = fpt::commands();
  return index < list.size() ? list[index].name : nullptr;
}

}  // extern "C"
