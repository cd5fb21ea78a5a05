#pragma once

/**
 * @file campaign.hpp
 * @brief Runs every selected identity over a grid and aggregates the outcome.
 *
 * One record is produced per (base point, lambda, identity); scalar
 * identities do not depend on lambda and get one record per base point.
 * A record is `pass` when every instance (n, m) of the identity holds, `fail`
 * as soon as one does not (the first failing instance is kept as witness),
 * and `degenerate` when the point violates a hypothesis of the identity.
 */

#include "hq3/grid.hpp"
#include "hq3/horadam.hpp"
#include "hq3/quat_sequences.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hq3 {

enum class Status : std::uint8_t { Pass, Fail, Degenerate };

const char* status_name(Status s);

struct FailureWitness {
    std::size_t n = 0;
    std::optional<std::size_t> m;
    nlohmann::json sides;
};

struct IdentityRecord {
    std::uint32_t point = 0;
    /// Index into GridSpec::lambdas; -1 for scalar identities.
    std::int32_t lambda = -1;
    std::uint16_t identity = 0;  ///< index into the campaign's identity list
    Status status = Status::Pass;
    std::uint32_t instances = 0;
    std::string reason;
    std::shared_ptr<const FailureWitness> witness;
};

struct IdentityTally {
    std::string id;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t degenerate = 0;
    std::size_t instances = 0;
};

struct CampaignOptions {
    /// Worker threads; 0 picks the number of processors.
    std::size_t jobs = 0;
    /// Adds 1 to the scalar part of the right-hand side of this identity.
    std::optional<std::string> perturb;
    /// Keep pass/degenerate records; fail records are always kept.
    bool keep_records = true;
};

struct CampaignResult {
    std::vector<BasePoint> points;
    std::vector<std::string> identities;
    std::vector<IdentityRecord> records;
    std::vector<IdentityTally> tallies;
    std::vector<std::string> notes;
    std::size_t fails = 0;
    double seconds = 0.0;

    int exit_code() const { return fails == 0 ? 0 : 1; }
};

/// Throws UnknownIdentity for a bad selection or perturb id.
CampaignResult run_campaign(const GridSpec& grid, const CampaignOptions& options = {});

/// HQ3_JOBS when set to a positive integer, else `flag`, else the processor count.
std::size_t resolve_jobs(std::optional<std::size_t> flag);

/// The reason a base point violates the root hypotheses, if any.
std::optional<std::string> point_degeneracy(const BasePoint& bp);

// JSON spellings shared by reports and the seq command.
nlohmann::json to_json(const Rational& x);
nlohmann::json to_json(const QuadExt& x);
nlohmann::json to_json(const PgqParams& l);
nlohmann::json to_json(const QuatQ& x);
nlohmann::json to_json(const QuatK& x);
nlohmann::json to_json(const BasePoint& bp);

}  // namespace hq3
