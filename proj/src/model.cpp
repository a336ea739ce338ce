#include "kolan/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace kolan {

namespace {

const std::string kKolType[] = {"Student", "Professional", "Entrepreneur", "Housewife"};
const std::string kPlatform[] = {"Instagram", "TikTok"};
const std::string kTier[] = {"Nano", "Micro", "MidTier", "Macro", "Mega"};
const std::string kTheme[] = {"Finance", "General"};
const std::string kAudience[] = {"Young", "VeryYoung"};
const std::string kFormat[] = {"Video", "Image"};

template <typename E, std::size_t N>
E parse_enum(const std::string (&names)[N], const std::string& s, const char* what) {
    for (std::size_t i = 0; i < N; ++i) {
        if (names[i] == s) return static_cast<E>(i);
    }
    throw ValidationError("", std::string("unknown ") + what + " \"" + s + "\"");
}

}  // namespace

const std::string& to_string(KolType v) { return kKolType[static_cast<int>(v)]; }
const std::string& to_string(Platform v) { return kPlatform[static_cast<int>(v)]; }
const std::string& to_string(FollowerTier v) { return kTier[static_cast<int>(v)]; }
const std::string& to_string(Theme v) { return kTheme[static_cast<int>(v)]; }
const std::string& to_string(Audience v) { return kAudience[static_cast<int>(v)]; }
const std::string& to_string(ContentFormat v) { return kFormat[static_cast<int>(v)]; }

KolType kol_type_from_string(const std::string& s) {
    return parse_enum<KolType>(kKolType, s, "kol_type");
}
Platform platform_from_string(const std::string& s) {
    return parse_enum<Platform>(kPlatform, s, "platform");
}
FollowerTier follower_tier_from_string(const std::string& s) {
    return parse_enum<FollowerTier>(kTier, s, "follower_tier");
}
Theme theme_from_string(const std::string& s) { return parse_enum<Theme>(kTheme, s, "theme"); }
Audience audience_from_string(const std::string& s) {
    return parse_enum<Audience>(kAudience, s, "audience");
}
ContentFormat content_format_from_string(const std::string& s) {
    return parse_enum<ContentFormat>(kFormat, s, "campaign_format");
}

FollowerTier tier_of(long long follower_count) {
    if (follower_count < 1000) throw BelowNano(follower_count);
    if (follower_count < 10'000) return FollowerTier::Nano;
    if (follower_count < 50'000) return FollowerTier::Micro;
    if (follower_count < 500'000) return FollowerTier::MidTier;
    if (follower_count < 1'000'000) return FollowerTier::Macro;
    return FollowerTier::Mega;
}

const KolProfile* Dataset::find_profile(const std::string& id) const {
    auto it = std::find_if(profiles.begin(), profiles.end(),
                           [&](const KolProfile& p) { return p.id == id; });
    return it == profiles.end() ? nullptr : &*it;
}

void validate(const Dataset& ds) {
    if (ds.profiles.empty()) {
        throw ValidationError("", "dataset must contain >=1 profile");
    }
    std::unordered_set<std::string> ids;
    for (const KolProfile& p : ds.profiles) {
        if (p.id.empty()) throw ValidationError(p.name, "profile id must be non-empty");
        if (!ids.insert(p.id).second) throw ValidationError(p.id, "duplicate profile id");
        if (p.follower_count < 0)
            throw ValidationError(p.id, "follower_count must be non-negative");
        if (p.post_count < 0) throw ValidationError(p.id, "post_count must be non-negative");
        if (p.campaign_likes < 0)
            throw ValidationError(p.id, "campaign_likes must be non-negative");
        if (!(p.avg_likes_per_post > 0.0))
            throw ValidationError(p.id, "avg_likes_per_post must be > 0");
        FollowerTier expected;
        try {
            expected = tier_of(p.follower_count);
        } catch (const BelowNano&) {
            throw ValidationError(p.id, "follower_count " + std::to_string(p.follower_count) +
                                            " is below the Nano band");
        }
        if (expected != p.follower_tier) {
            throw ValidationError(p.id, "follower_tier " + to_string(p.follower_tier) +
                                            " inconsistent with follower_count " +
                                            std::to_string(p.follower_count) + " (expected " +
                                            to_string(expected) + ")");
        }
    }
    for (const CommentCorpus& c : ds.corpora) {
        if (!ids.count(c.kol_id)) throw DanglingReference(c.kol_id);
        if (c.comments.empty())
            throw ValidationError(c.kol_id, "comment corpus must be non-empty");
        if (c.source_platform != Platform::Instagram)
            throw ValidationError(c.kol_id, "comment corpora are Instagram-only");
    }
}

}  // namespace kolan
