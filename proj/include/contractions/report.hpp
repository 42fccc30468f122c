#pragma once

#include <string>
#include <vector>

namespace contractions::cli {

enum class Status { Pass, Fail, Unverified };

std::string status_name(Status s);

struct Record {
  std::string id;
  std::string claim;
  std::string provenance;  // "derived" or "catalog"
  Status status = Status::Pass;
  std::string details;
  std::string cite;
};

/// Machine-checkable command output: one record per verified claim.
/// Exit code 0 means no FAIL; UNVERIFIED never fails a run.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(Record r);
  void pass(std::string id, std::string claim, std::string details, std::string cite,
            std::string provenance = "derived");
  void fail(std::string id, std::string claim, std::string details, std::string cite,
            std::string provenance = "derived");
  void unverified(std::string id, std::string claim, std::string details, std::string cite,
                  std::string provenance = "catalog");
  void check(bool ok, std::string id, std::string claim, std::string details, std::string cite,
             std::string provenance = "derived");

  const std::vector<Record>& records() const { return records_; }
  int exit_code() const;
  std::string render_text() const;
  std::string render_json() const;

 private:
  std::string command_;
  std::vector<Record> records_;
};

}  // namespace contractions::cli
