#pragma once

#include <string>
#include <vector>

#include "kolan/errors.hpp"

namespace kolan {

enum class KolType { Student, Professional, Entrepreneur, Housewife };
enum class Platform { Instagram, TikTok };
enum class FollowerTier { Nano, Micro, MidTier, Macro, Mega };
enum class Theme { Finance, General };
enum class Audience { Young, VeryYoung };
enum class ContentFormat { Video, Image };

const std::string& to_string(KolType v);
const std::string& to_string(Platform v);
const std::string& to_string(FollowerTier v);
const std::string& to_string(Theme v);
const std::string& to_string(Audience v);
const std::string& to_string(ContentFormat v);

// Parsers accept exactly the canonical spelling; anything else throws
// ValidationError so a typo can never silently shift a categorical encoding.
KolType kol_type_from_string(const std::string& s);
Platform platform_from_string(const std::string& s);
FollowerTier follower_tier_from_string(const std::string& s);
Theme theme_from_string(const std::string& s);
Audience audience_from_string(const std::string& s);
ContentFormat content_format_from_string(const std::string& s);

struct KolProfile {
    std::string id;
    std::string name;
    KolType kol_type = KolType::Professional;
    Platform platform = Platform::Instagram;
    FollowerTier follower_tier = FollowerTier::Nano;
    long long follower_count = 0;
    long long post_count = 0;
    double avg_likes_per_post = 0.0;  // likes/post, must stay > 0
    Theme theme = Theme::Finance;
    Audience audience = Audience::Young;
    long long campaign_likes = 0;
    ContentFormat campaign_format = ContentFormat::Image;

    bool operator==(const KolProfile&) const = default;
};

struct CommentCorpus {
    std::string kol_id;
    Platform source_platform = Platform::Instagram;
    std::vector<std::string> comments;

    bool operator==(const CommentCorpus&) const = default;
};

// Immutable after load_dataset(); safe to share read-only across threads.
struct Dataset {
    std::vector<KolProfile> profiles;
    std::vector<CommentCorpus> corpora;

    const KolProfile* find_profile(const std::string& id) const;
    bool operator==(const Dataset&) const = default;
};

// Band containing the count; bands are half-open [lo, hi) so 10,000 is Micro.
// Throws BelowNano for counts < 1000.
FollowerTier tier_of(long long follower_count);

// Checks every profile/corpus invariant; throws ValidationError or
// DanglingReference with the offending entity id.
void validate(const Dataset& ds);

}  // namespace kolan
