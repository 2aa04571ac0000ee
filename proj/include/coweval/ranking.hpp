#pragma once

#include <map>
#include <string>
#include <vector>

namespace coweval {

struct MetricColumn {
    std::string key;
    bool higher_better = true;
};

/// One team's value per metric column (aggregate means, or per-case values
/// in per-case mode flattened upstream).
struct TeamColumns {
    std::string team;
    std::map<std::string, double> values;
};

struct Leaderboard {
    std::vector<std::string> columns;
    // Parallel arrays ordered by final standing.
    std::vector<std::string> teams;
    std::vector<std::vector<double>> column_ranks;  // [team][column], tied ranks averaged
    std::vector<double> average_rank;
};

/// Rank-then-average: teams ranked per column in its favorable direction
/// (ties get the mean of the tied positions), ranks averaged with equal
/// weights, final order ascending; residual ties break by team name.
Leaderboard rank_teams(const std::vector<TeamColumns>& teams, const std::vector<MetricColumn>& columns);

std::string leaderboard_to_json(const Leaderboard& board);
std::string leaderboard_to_table(const Leaderboard& board);

}  // namespace coweval
