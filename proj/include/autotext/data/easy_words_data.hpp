#pragma once

// Easy-word list for the Dale-Chall style difficult-word measures, one word per line.
// Generated data; edit deliberately, the content hash is pinned in
// extraction metadata and registry fingerprints.

namespace autotext::data {

inline constexpr const char* kEasyWords =
    "a\n"
    "about\n"
    "above\n"
    "across\n"
    "act\n"
    "add\n"
    "afraid\n"
    "after\n"
    "afternoon\n"
    "again\n"
    "against\n"
    "age\n"
    "ago\n"
    "agree\n"
    "air\n"
    "all\n"
    "almost\n"
    "alone\n"
    "along\n"
    "already\n"
    "also\n"
    "always\n"
    "am\n"
    "among\n"
    "an\n"
    "and\n"
    "angry\n"
    "animal\n"
    "another\n"
    "answer\n"
    "any\n"
    "anyone\n"
    "anything\n"
    "appear\n"
    "apple\n"
    "are\n"
    "arm\n"
    "around\n"
    "arrive\n"
    "art\n"
    "as\n"
    "ask\n"
    "at\n"
    "ate\n"
    "aunt\n"
    "away\n"
    "baby\n"
    "back\n"
    "bad\n"
    "bag\n"
    "ball\n"
    "banana\n"
    "band\n"
    "bank\n"
    "barn\n"
    "base\n"
    "basket\n"
    "bat\n"
    "bath\n"
    "be\n"
    "bean\n"
    "bear\n"
    "beat\n"
    "beautiful\n"
    "became\n"
    "because\n"
    "become\n"
    "bed\n"
    "bee\n"
    "been\n"
    "before\n"
    "began\n"
    "begin\n"
    "behind\n"
    "being\n"
    "believe\n"
    "bell\n"
    "belong\n"
    "below\n"
    "belt\n"
    "bend\n"
    "bent\n"
    "beside\n"
    "best\n"
    "better\n"
    "between\n"
    "big\n"
    "bird\n"
    "birthday\n"
    "bit\n"
    "bite\n"
    "black\n"
    "blew\n"
    "block\n"
    "blood\n"
    "blow\n"
    "blue\n"
    "board\n"
    "boat\n"
    "body\n"
    "bone\n"
    "book\n"
    "boot\n"
    "born\n"
    "borrow\n"
    "both\n"
    "bottle\n"
    "bottom\n"
    "bought\n"
    "bowl\n"
    "box\n"
    "boy\n"
    "branch\n"
    "brave\n"
    "bread\n"
    "break\n"
    "breakfast\n"
    "brick\n"
    "bridge\n"
    "bright\n"
    "bring\n"
    "broke\n"
    "broken\n"
    "brother\n"
    "brought\n"
    "brown\n"
    "brush\n"
    "build\n"
    "built\n"
    "burn\n"
    "bus\n"
    "busy\n"
    "but\n"
    "butter\n"
    "buy\n"
    "by\n"
    "cabin\n"
    "cage\n"
    "cake\n"
    "call\n"
    "came\n"
    "camp\n"
    "can\n"
    "candy\n"
    "cap\n"
    "car\n"
    "card\n"
    "care\n"
    "careful\n"
    "carry\n"
    "cat\n"
    "catch\n"
    "cattle\n"
    "caught\n"
    "cause\n"
    "cent\n"
    "center\n"
    "chain\n"
    "chair\n"
    "chance\n"
    "change\n"
    "chase\n"
    "cheek\n"
    "cheese\n"
    "chest\n"
    "chicken\n"
    "chief\n"
    "child\n"
    "children\n"
    "city\n"
    "clap\n"
    "class\n"
    "clay\n"
    "clean\n"
    "clear\n"
    "climb\n"
    "clock\n"
    "close\n"
    "cloth\n"
    "clothes\n"
    "cloud\n"
    "coat\n"
    "cold\n"
    "color\n"
    "come\n"
    "cook\n"
    "cool\n"
    "copy\n"
    "corn\n"
    "corner\n"
    "cost\n"
    "cotton\n"
    "could\n"
    "count\n"
    "country\n"
    "course\n"
    "cover\n"
    "cow\n"
    "crack\n"
    "cream\n"
    "cross\n"
    "crowd\n"
    "cry\n"
    "cup\n"
    "cut\n"
    "dad\n"
    "daily\n"
    "dance\n"
    "dark\n"
    "day\n"
    "dead\n"
    "dear\n"
    "decide\n"
    "deep\n"
    "deer\n"
    "desk\n"
    "did\n"
    "die\n"
    "different\n"
    "dig\n"
    "dinner\n"
    "dirt\n"
    "dish\n"
    "do\n"
    "doctor\n"
    "does\n"
    "dog\n"
    "doll\n"
    "dollar\n"
    "done\n"
    "door\n"
    "down\n"
    "draw\n"
    "dream\n"
    "dress\n"
    "drink\n"
    "drive\n"
    "drop\n"
    "drove\n"
    "dry\n"
    "duck\n"
    "dust\n"
    "each\n"
    "ear\n"
    "early\n"
    "earn\n"
    "earth\n"
    "east\n"
    "easy\n"
    "eat\n"
    "egg\n"
    "eight\n"
    "either\n"
    "elephant\n"
    "else\n"
    "empty\n"
    "end\n"
    "enjoy\n"
    "enough\n"
    "enter\n"
    "even\n"
    "evening\n"
    "ever\n"
    "every\n"
    "everyone\n"
    "everything\n"
    "except\n"
    "eye\n"
    "face\n"
    "fact\n"
    "fall\n"
    "family\n"
    "far\n"
    "farm\n"
    "farmer\n"
    "fast\n"
    "fat\n"
    "father\n"
    "feed\n"
    "feel\n"
    "feet\n"
    "fell\n"
    "felt\n"
    "fence\n"
    "few\n"
    "field\n"
    "fight\n"
    "fill\n"
    "find\n"
    "fine\n"
    "finger\n"
    "finish\n"
    "fire\n"
    "first\n"
    "fish\n"
    "fit\n"
    "five\n"
    "fix\n"
    "flag\n"
    "flat\n"
    "flew\n"
    "floor\n"
    "flower\n"
    "fly\n"
    "follow\n"
    "food\n"
    "foot\n"
    "for\n"
    "forest\n"
    "forget\n"
    "forgot\n"
    "form\n"
    "found\n"
    "four\n"
    "fox\n"
    "free\n"
    "fresh\n"
    "friend\n"
    "frog\n"
    "from\n"
    "front\n"
    "fruit\n"
    "full\n"
    "fun\n"
    "funny\n"
    "game\n"
    "garden\n"
    "gate\n"
    "gave\n"
    "get\n"
    "gift\n"
    "girl\n"
    "give\n"
    "glad\n"
    "glass\n"
    "go\n"
    "goes\n"
    "going\n"
    "gold\n"
    "gone\n"
    "good\n"
    "got\n"
    "grade\n"
    "grain\n"
    "grandfather\n"
    "grandmother\n"
    "grass\n"
    "gray\n"
    "great\n"
    "green\n"
    "grew\n"
    "ground\n"
    "group\n"
    "grow\n"
    "guess\n"
    "had\n"
    "hair\n"
    "half\n"
    "hall\n"
    "hand\n"
    "hang\n"
    "happen\n"
    "happy\n"
    "hard\n"
    "has\n"
    "hat\n"
    "have\n"
    "he\n"
    "head\n"
    "hear\n"
    "heard\n"
    "heart\n"
    "heavy\n"
    "held\n"
    "hello\n"
    "help\n"
    "hen\n"
    "her\n"
    "here\n"
    "herself\n"
    "hid\n"
    "hide\n"
    "high\n"
    "hill\n"
    "him\n"
    "himself\n"
    "his\n"
    "hit\n"
    "hold\n"
    "hole\n"
    "home\n"
    "hope\n"
    "horse\n"
    "hot\n"
    "hour\n"
    "house\n"
    "how\n"
    "hundred\n"
    "hungry\n"
    "hunt\n"
    "hurry\n"
    "hurt\n"
    "i\n"
    "ice\n"
    "idea\n"
    "if\n"
    "important\n"
    "in\n"
    "inch\n"
    "inside\n"
    "into\n"
    "iron\n"
    "is\n"
    "it\n"
    "its\n"
    "itself\n"
    "job\n"
    "join\n"
    "jump\n"
    "just\n"
    "keep\n"
    "kept\n"
    "key\n"
    "kick\n"
    "kill\n"
    "kind\n"
    "king\n"
    "kitchen\n"
    "kitten\n"
    "knee\n"
    "knew\n"
    "knife\n"
    "knock\n"
    "know\n"
    "lady\n"
    "laid\n"
    "lake\n"
    "land\n"
    "large\n"
    "last\n"
    "late\n"
    "laugh\n"
    "lay\n"
    "lazy\n"
    "lead\n"
    "leaf\n"
    "learn\n"
    "least\n"
    "leave\n"
    "left\n"
    "leg\n"
    "lesson\n"
    "let\n"
    "letter\n"
    "life\n"
    "lift\n"
    "light\n"
    "like\n"
    "line\n"
    "lion\n"
    "lip\n"
    "list\n"
    "listen\n"
    "little\n"
    "live\n"
    "long\n"
    "look\n"
    "lost\n"
    "lot\n"
    "loud\n"
    "love\n"
    "low\n"
    "lunch\n"
    "made\n"
    "mail\n"
    "make\n"
    "man\n"
    "many\n"
    "map\n"
    "march\n"
    "mark\n"
    "market\n"
    "matter\n"
    "may\n"
    "me\n"
    "mean\n"
    "meat\n"
    "meet\n"
    "men\n"
    "met\n"
    "middle\n"
    "might\n"
    "mile\n"
    "milk\n"
    "mind\n"
    "mine\n"
    "minute\n"
    "miss\n"
    "money\n"
    "monkey\n"
    "month\n"
    "moon\n"
    "more\n"
    "morning\n"
    "most\n"
    "mother\n"
    "mountain\n"
    "mouse\n"
    "mouth\n"
    "move\n"
    "much\n"
    "mud\n"
    "music\n"
    "must\n"
    "my\n"
    "myself\n"
    "name\n"
    "near\n"
    "neck\n"
    "need\n"
    "needle\n"
    "nest\n"
    "never\n"
    "new\n"
    "next\n"
    "nice\n"
    "night\n"
    "nine\n"
    "no\n"
    "noise\n"
    "none\n"
    "noon\n"
    "north\n"
    "nose\n"
    "not\n"
    "note\n"
    "nothing\n"
    "now\n"
    "number\n"
    "nut\n"
    "ocean\n"
    "of\n"
    "off\n"
    "often\n"
    "oh\n"
    "old\n"
    "on\n"
    "once\n"
    "one\n"
    "only\n"
    "open\n"
    "or\n"
    "orange\n"
    "other\n"
    "our\n"
    "out\n"
    "outside\n"
    "over\n"
    "own\n"
    "page\n"
    "paid\n"
    "pain\n"
    "paint\n"
    "pair\n"
    "pan\n"
    "paper\n"
    "part\n"
    "party\n"
    "pass\n"
    "past\n"
    "pay\n"
    "pen\n"
    "pencil\n"
    "penny\n"
    "people\n"
    "pet\n"
    "pick\n"
    "picture\n"
    "pie\n"
    "piece\n"
    "pig\n"
    "place\n"
    "plan\n"
    "plant\n"
    "play\n"
    "please\n"
    "pocket\n"
    "point\n"
    "pond\n"
    "poor\n"
    "pop\n"
    "post\n"
    "pot\n"
    "pour\n"
    "present\n"
    "pretty\n"
    "pull\n"
    "push\n"
    "put\n"
    "queen\n"
    "quick\n"
    "quiet\n"
    "quite\n"
    "rabbit\n"
    "race\n"
    "rain\n"
    "ran\n"
    "ranch\n"
    "rather\n"
    "reach\n"
    "read\n"
    "ready\n"
    "real\n"
    "red\n"
    "remember\n"
    "rest\n"
    "ride\n"
    "right\n"
    "ring\n"
    "rise\n"
    "river\n"
    "road\n"
    "rock\n"
    "roll\n"
    "roof\n"
    "room\n"
    "rope\n"
    "rose\n"
    "round\n"
    "row\n"
    "rub\n"
    "run\n"
    "sad\n"
    "safe\n"
    "said\n"
    "sail\n"
    "salt\n"
    "same\n"
    "sand\n"
    "sat\n"
    "save\n"
    "saw\n"
    "say\n"
    "school\n"
    "sea\n"
    "season\n"
    "seat\n"
    "second\n"
    "see\n"
    "seed\n"
    "seem\n"
    "seen\n"
    "sell\n"
    "send\n"
    "sent\n"
    "set\n"
    "seven\n"
    "several\n"
    "shake\n"
    "shall\n"
    "shape\n"
    "she\n"
    "sheep\n"
    "shine\n"
    "ship\n"
    "shirt\n"
    "shoe\n"
    "shop\n"
    "short\n"
    "should\n"
    "show\n"
    "sick\n"
    "side\n"
    "sign\n"
    "silver\n"
    "simple\n"
    "since\n"
    "sing\n"
    "sister\n"
    "sit\n"
    "six\n"
    "size\n"
    "skin\n"
    "sky\n"
    "sleep\n"
    "slow\n"
    "small\n"
    "smell\n"
    "smile\n"
    "smoke\n"
    "snow\n"
    "so\n"
    "soft\n"
    "sold\n"
    "some\n"
    "someone\n"
    "something\n"
    "song\n"
    "soon\n"
    "sound\n"
    "soup\n"
    "south\n"
    "space\n"
    "speak\n"
    "spell\n"
    "spend\n"
    "spent\n"
    "spoke\n"
    "spot\n"
    "spread\n"
    "spring\n"
    "square\n"
    "stand\n"
    "star\n"
    "start\n"
    "state\n"
    "stay\n"
    "step\n"
    "stick\n"
    "still\n"
    "stone\n"
    "stood\n"
    "stop\n"
    "store\n"
    "story\n"
    "straight\n"
    "strange\n"
    "street\n"
    "strong\n"
    "such\n"
    "sudden\n"
    "sugar\n"
    "summer\n"
    "sun\n"
    "supper\n"
    "sure\n"
    "sweet\n"
    "swim\n"
    "table\n"
    "tail\n"
    "take\n"
    "talk\n"
    "tall\n"
    "taste\n"
    "teach\n"
    "teacher\n"
    "team\n"
    "tell\n"
    "ten\n"
    "tent\n"
    "test\n"
    "than\n"
    "thank\n"
    "that\n"
    "the\n"
    "their\n"
    "them\n"
    "then\n"
    "there\n"
    "these\n"
    "they\n"
    "thick\n"
    "thin\n"
    "thing\n"
    "think\n"
    "third\n"
    "this\n"
    "those\n"
    "though\n"
    "thought\n"
    "thousand\n"
    "three\n"
    "threw\n"
    "through\n"
    "throw\n"
    "tie\n"
    "time\n"
    "tiny\n"
    "tired\n"
    "to\n"
    "today\n"
    "together\n"
    "told\n"
    "tomorrow\n"
    "too\n"
    "took\n"
    "tooth\n"
    "top\n"
    "touch\n"
    "toward\n"
    "town\n"
    "toy\n"
    "train\n"
    "tree\n"
    "trip\n"
    "truck\n"
    "true\n"
    "try\n"
    "turn\n"
    "twelve\n"
    "twenty\n"
    "two\n"
    "uncle\n"
    "under\n"
    "until\n"
    "up\n"
    "upon\n"
    "us\n"
    "use\n"
    "valley\n"
    "very\n"
    "visit\n"
    "voice\n"
    "wag\n"
    "wagon\n"
    "wait\n"
    "wake\n"
    "walk\n"
    "wall\n"
    "want\n"
    "war\n"
    "warm\n"
    "was\n"
    "wash\n"
    "watch\n"
    "water\n"
    "wave\n"
    "way\n"
    "we\n"
    "wear\n"
    "weather\n"
    "week\n"
    "well\n"
    "went\n"
    "were\n"
    "west\n"
    "wet\n"
    "what\n"
    "wheel\n"
    "when\n"
    "where\n"
    "which\n"
    "while\n"
    "white\n"
    "who\n"
    "whole\n"
    "why\n"
    "wide\n"
    "wife\n"
    "wild\n"
    "will\n"
    "win\n"
    "wind\n"
    "window\n"
    "wing\n"
    "winter\n"
    "wish\n"
    "with\n"
    "without\n"
    "woke\n"
    "woman\n"
    "women\n"
    "wonder\n"
    "wood\n"
    "word\n"
    "wore\n"
    "work\n"
    "world\n"
    "would\n"
    "write\n"
    "wrong\n"
    "wrote\n"
    "yard\n"
    "year\n"
    "yellow\n"
    "yes\n"
    "yesterday\n"
    "yet\n"
    "you\n"
    "young\n"
    "your\n"
    "yourself\n";

}  // namespace autotext::data
