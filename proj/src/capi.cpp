#include <string>

#include "superbethe/campaign.hpp"
#include "superbethe/error.hpp"
#include "superbethe/superbethe.h"

using superbethe::CampaignConfig;
using superbethe::Error;
using superbethe::Report;

struct sb_campaign {
  CampaignConfig config;
  Report report;
  std::string rendered;
  std::string scratch;
};

namespace {

thread_local std::string last_error;

template <class Body>
sb_status guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return SB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<sb_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    last_error = e.what();
    return SB_INTERNAL;
  }
}

sb_status null_handle() {
  last_error = "null handle";
  return SB_NULL_HANDLE;
}

}  // namespace

extern "C" {

const char* sb_version(void) { return "1.0.0"; }

const char* sb_status_string(sb_status status) {
  switch (status) {
    case SB_OK:
      return "ok";
    case SB_NULL_HANDLE:
      return "null_handle";
    case SB_INTERNAL:
      return "internal";
    default:
      break;
  }
  const int code = static_cast<int>(status);
  if (code >= 1 && code <= static_cast<int>(superbethe::Errc::config_error)) {
    return superbethe::to_string(static_cast<superbethe::Errc>(code));
  }
  return "unknown";
}

const char* sb_last_error(void) { return last_error.c_str(); }

sb_status sb_campaign_create(sb_campaign** out) {
  if (out == nullptr) return null_handle();
  return guard([&] { *out = new sb_campaign(); });
}

void sb_campaign_destroy(sb_campaign* campaign) { delete campaign; }

sb_status sb_campaign_load(sb_campaign* campaign, const char* text) {
  if (campaign == nullptr || text == nullptr) return null_handle();
  return guard([&] { campaign->config = superbethe::parse_config(text); });
}

sb_status sb_campaign_load_file(sb_campaign* campaign, const char* path) {
  if (campaign == nullptr || path == nullptr) return null_handle();
  return guard([&] { campaign->config = superbethe::load_config(path); });
}

sb_status sb_campaign_set(sb_campaign* campaign, const char* key, const char* value) {
  if (campaign == nullptr || key == nullptr || value == nullptr) return null_handle();
  return guard([&] { campaign->config.set(key, value); });
}

sb_status sb_campaign_get(sb_campaign* campaign, const char* key, const char** value) {
  if (campaign == nullptr || key == nullptr || value == nullptr) return null_handle();
  return guard([&] {
    const CampaignConfig& c = campaign->config;
    const std::string k = key;
    std::string& v = campaign->scratch;
    if (k == "out") {
      v = c.out;
    } else if (k == "preset") {
      v = c.preset;
    } else if (k == "seed") {
      v = std::to_string(c.seed);
    } else if (k == "q") {
      v = c.q.get_str();
    } else if (k == "checks") {
      v.clear();
      for (const auto& name : c.checks) v += (v.empty() ? "" : ",") + name;
    } else {
      throw Error(superbethe::Errc::config_error, "field '" + k + "' cannot be read back");
    }
    *value = v.c_str();
  });
}

sb_status sb_campaign_run(sb_campaign* campaign, int* passed) {
  if (campaign == nullptr) return null_handle();
  return guard([&] {
    campaign->report = superbethe::run_campaign(campaign->config);
    campaign->rendered = campaign->report.render();
    if (passed != nullptr) *passed = campaign->report.passed() ? 1 : 0;
  });
}

const char* sb_campaign_report(const sb_campaign* campaign) {
  return campaign == nullptr ? "" : campaign->rendered.c_str();
}

size_t sb_campaign_entry_count(const sb_campaign* campaign) {
  return campaign == nullptr ? 0 : campaign->report.entries.size();
}

sb_status sb_campaign_counts(const sb_campaign* campaign, size_t* pass, size_t* fail, size_t* skip) {
  if (campaign == nullptr) return null_handle();
  size_t p = 0;
  size_t f = 0;
  size_t k = 0;
  for (const auto& e : campaign->report.entries) {
    if (e.verdict == superbethe::Verdict::pass) ++p;
    if (e.verdict == superbethe::Verdict::fail) ++f;
    if (e.verdict == superbethe::Verdict::skip) ++k;
  }
  if (pass != nullptr) *pass = p;
  if (fail != nullptr) *fail = f;
  if (skip != nullptr) *skip = k;
  last_error.clear();
  return SB_OK;
}

}  // extern "C"
