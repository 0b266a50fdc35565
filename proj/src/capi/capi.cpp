#include <cstdlib>
#include <cstring>
#include <string>

#include "cychom.h"
#include "cychom/commands.hpp"

struct cychom_session {
  cychom::SessionConfig cfg;
  std::string error;
};

namespace {

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

cychom_status cychom_session_new(const char* config_json, cychom_session** out) {
  if (!out) return CYCHOM_BAD_INPUT;
  *out = nullptr;
  try {
    cychom::Json j = config_json ? cychom::Json::parse(config_json) : cychom::Json();
    *out = new cychom_session{cychom::parse_config(j), ""};
    return CYCHOM_OK;
  } catch (const cychom::Json::parse_error&) {
    return CYCHOM_BAD_INPUT;
  } catch (const cychom::InputError&) {
    return CYCHOM_BAD_INPUT;
  } catch (...) {
    return CYCHOM_INTERNAL;
  }
}

void cychom_session_free(cychom_session* s) { delete s; }

cychom_status cychom_run(cychom_session* s, const char* command, const char* args_json, char** report_json) {
  if (!s) return CYCHOM_BAD_INPUT;
  if (report_json) *report_json = nullptr;
  s->error.clear();
  if (!command || !args_json || !report_json) {
    s->error = "null argument";
    return CYCHOM_BAD_INPUT;
  }
  try {
    cychom::Json args;
    try {
      args = cychom::Json::parse(args_json);
    } catch (const cychom::Json::parse_error& e) {
      throw cychom::InputError("(args)", e.what());
    }
    cychom::CommandResult r = cychom::run_command(command, args, s->cfg);
    *report_json = dup(r.report.dump(2) + "\n");
    if (!*report_json) throw std::bad_alloc();
    return r.all_pass ? CYCHOM_OK : CYCHOM_CERT_FAILED;
  } catch (const cychom::InputError& e) {
    s->error = e.what();
    return CYCHOM_BAD_INPUT;
  } catch (const std::invalid_argument& e) {
    s->error = e.what();
    return CYCHOM_BAD_INPUT;
  } catch (const std::exception& e) {
    s->error = e.what();
    return CYCHOM_INTERNAL;
  } catch (...) {
    s->error = "unknown error";
    return CYCHOM_INTERNAL;
  }
}

cychom_status cychom_summarize(const char* report_json, char** text) {
  if (!report_json || !text) return CYCHOM_BAD_INPUT;
  try {
    *text = dup(cychom::summarize(cychom::Json::parse(report_json)));
    return *text ? CYCHOM_OK : CYCHOM_INTERNAL;
  } catch (const cychom::Json::exception&) {
    return CYCHOM_BAD_INPUT;
  } catch (...) {
    return CYCHOM_INTERNAL;
  }
}

void cychom_string_free(char* p) { std::free(p); }

const char* cychom_last_error(const cychom_session* s) { return s ? s->error.c_str() : "null session"; }

const char* cychom_version(void) { return "0.1.0"; }

}  // extern "C"
