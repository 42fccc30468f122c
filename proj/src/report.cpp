#include "contractions/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace contractions::cli {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Unverified:
      return "UNVERIFIED";
  }
  return "?";
}

void Report::add(Record r) {
  if (r.status != Status::Unverified && r.cite.empty())
    throw std::logic_error("report: PASS/FAIL records need a citation");
  records_.push_back(std::move(r));
}

void Report::pass(std::string id, std::string claim, std::string details, std::string cite,
                  std::string provenance) {
  add({std::move(id), std::move(claim), std::move(provenance), Status::Pass, std::move(details),
       std::move(cite)});
}

void Report::fail(std::string id, std::string claim, std::string details, std::string cite,
                  std::string provenance) {
  add({std::move(id), std::move(claim), std::move(provenance), Status::Fail, std::move(details),
       std::move(cite)});
}

void Report::unverified(std::string id, std::string claim, std::string details, std::string cite,
                        std::string provenance) {
  add({std::move(id), std::move(claim), std::move(provenance), Status::Unverified,
       std::move(details), std::move(cite)});
}

void Report::check(bool ok, std::string id, std::string claim, std::string details,
                   std::string cite, std::string provenance) {
  if (ok)
    pass(std::move(id), std::move(claim), std::move(details), std::move(cite), std::move(provenance));
  else
    fail(std::move(id), std::move(claim), std::move(details), std::move(cite), std::move(provenance));
}

int Report::exit_code() const {
  for (const auto& r : records_)
    if (r.status == Status::Fail) return 1;
  return 0;
}

std::string Report::render_text() const {
  std::ostringstream os;
  os << "== " << command_ << " ==\n";
  size_t pass = 0, fail = 0, unv = 0;
  for (const auto& r : records_) {
    os << "[" << status_name(r.status) << "] " << r.id << ": " << r.claim;
    if (!r.details.empty()) os << " -- " << r.details;
    if (!r.cite.empty()) os << "  (" << r.cite << "; " << r.provenance << ")";
    os << "\n";
    if (r.status == Status::Pass) ++pass;
    if (r.status == Status::Fail) ++fail;
    if (r.status == Status::Unverified) ++unv;
  }
  os << "summary: " << pass << " pass, " << fail << " fail, " << unv << " unverified\n";
  return os.str();
}

std::string Report::render_json() const {
  nlohmann::json out;
  out["command"] = command_;
  nlohmann::json recs = nlohmann::json::array();
  size_t pass = 0, fail = 0, unv = 0;
  for (const auto& r : records_) {
    nlohmann::json j;
    j["id"] = r.id;
    j["claim"] = r.claim;
    j["provenance"] = r.provenance;
    j["status"] = status_name(r.status);
    j["details"] = r.details;
    j["cite"] = r.cite;
    recs.push_back(std::move(j));
    if (r.status == Status::Pass) ++pass;
    if (r.status == Status::Fail) ++fail;
    if (r.status == Status::Unverified) ++unv;
  }
  out["records"] = std::move(recs);
  out["summary"] = {{"pass", pass}, {"fail", fail}, {"unverified", unv}, {"exit", exit_code()}};
  return out.dump(2) + "\n";
}

}  // namespace contractions::cli
