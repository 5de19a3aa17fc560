#pragma once

// Word -> universal POS tag lexicon (most-frequent-tag convention), one 'word TAG' pair per line.
// Generated data; edit deliberately, the content hash is pinned in
// extraction metadata and registry fingerprints.

namespace autotext::data {

inline constexpr const char* kPosLexicon =
    "'s PRT\n"
    "a DET\n"
    "able ADJ\n"
    "about ADP\n"
    "above ADP\n"
    "abroad ADV\n"
    "across ADP\n"
    "action NOUN\n"
    "activity NOUN\n"
    "actually ADV\n"
    "add VERB\n"
    "added VERB\n"
    "address NOUN\n"
    "adds VERB\n"
    "afraid ADJ\n"
    "after ADP\n"
    "again ADV\n"
    "against ADP\n"
    "age NOUN\n"
    "agree VERB\n"
    "agreed VERB\n"
    "agrees VERB\n"
    "ahead ADV\n"
    "air NOUN\n"
    "airport NOUN\n"
    "albeit CONJ\n"
    "all DET\n"
    "allow VERB\n"
    "allowed VERB\n"
    "allows VERB\n"
    "almost ADV\n"
    "alone ADV\n"
    "along ADP\n"
    "already ADV\n"
    "also ADV\n"
    "although CONJ\n"
    "always ADV\n"
    "am VERB\n"
    "american NOUN\n"
    "amid ADP\n"
    "among ADP\n"
    "an DET\n"
    "and CONJ\n"
    "angry ADJ\n"
    "animal NOUN\n"
    "another DET\n"
    "any DET\n"
    "anybody PRON\n"
    "anyone PRON\n"
    "anything PRON\n"
    "anyway ADV\n"
    "anywhere ADV\n"
    "appear VERB\n"
    "appeared VERB\n"
    "appears VERB\n"
    "apple NOUN\n"
    "are VERB\n"
    "area NOUN\n"
    "argue VERB\n"
    "argued VERB\n"
    "argues VERB\n"
    "arm NOUN\n"
    "army NOUN\n"
    "around ADP\n"
    "art NOUN\n"
    "article NOUN\n"
    "ask VERB\n"
    "asked VERB\n"
    "asks VERB\n"
    "at ADP\n"
    "ate VERB\n"
    "audience NOUN\n"
    "author NOUN\n"
    "available ADJ\n"
    "away ADV\n"
    "back ADV\n"
    "bad ADJ\n"
    "bag NOUN\n"
    "ball NOUN\n"
    "bank NOUN\n"
    "bar NOUN\n"
    "basically ADV\n"
    "bathroom NOUN\n"
    "battle NOUN\n"
    "be VERB\n"
    "beautiful ADJ\n"
    "became VERB\n"
    "because CONJ\n"
    "become VERB\n"
    "becomes VERB\n"
    "bed NOUN\n"
    "bedroom NOUN\n"
    "been VERB\n"
    "beer NOUN\n"
    "before ADP\n"
    "began VERB\n"
    "begin VERB\n"
    "begins VERB\n"
    "begun VERB\n"
    "behind ADP\n"
    "being VERB\n"
    "believe VERB\n"
    "believed VERB\n"
    "believes VERB\n"
    "below ADP\n"
    "beneath ADP\n"
    "benefit NOUN\n"
    "beside ADP\n"
    "besides ADP\n"
    "best ADJ\n"
    "better ADJ\n"
    "between ADP\n"
    "beyond ADP\n"
    "bicycle NOUN\n"
    "big ADJ\n"
    "billion NUM\n"
    "biology NOUN\n"
    "bird NOUN\n"
    "black ADJ\n"
    "blue ADJ\n"
    "boat NOUN\n"
    "body NOUN\n"
    "book NOUN\n"
    "both DET\n"
    "bought VERB\n"
    "box NOUN\n"
    "boy NOUN\n"
    "bread NOUN\n"
    "break VERB\n"
    "breakfast NOUN\n"
    "breaks VERB\n"
    "bring VERB\n"
    "brings VERB\n"
    "broke VERB\n"
    "broken VERB\n"
    "brother NOUN\n"
    "brought VERB\n"
    "brown ADJ\n"
    "build VERB\n"
    "building NOUN\n"
    "builds VERB\n"
    "built VERB\n"
    "bus NOUN\n"
    "business NOUN\n"
    "busy ADJ\n"
    "but CONJ\n"
    "button NOUN\n"
    "buy VERB\n"
    "buys VERB\n"
    "by ADP\n"
    "call VERB\n"
    "called VERB\n"
    "calls VERB\n"
    "came VERB\n"
    "camera NOUN\n"
    "can VERB\n"
    "car NOUN\n"
    "card NOUN\n"
    "care NOUN\n"
    "carefully ADV\n"
    "carried VERB\n"
    "carries VERB\n"
    "carry VERB\n"
    "case NOUN\n"
    "cat NOUN\n"
    "cause VERB\n"
    "caused VERB\n"
    "causes VERB\n"
    "center NOUN\n"
    "central ADJ\n"
    "certain ADJ\n"
    "certainly ADV\n"
    "chair NOUN\n"
    "chance NOUN\n"
    "character NOUN\n"
    "chemistry NOUN\n"
    "child NOUN\n"
    "children NOUN\n"
    "choose VERB\n"
    "chooses VERB\n"
    "chose VERB\n"
    "chosen VERB\n"
    "church NOUN\n"
    "city NOUN\n"
    "class NOUN\n"
    "clear ADJ\n"
    "clearly ADV\n"
    "clock NOUN\n"
    "closely ADV\n"
    "cloud NOUN\n"
    "coat NOUN\n"
    "coffee NOUN\n"
    "cold ADJ\n"
    "college NOUN\n"
    "color NOUN\n"
    "come VERB\n"
    "comes VERB\n"
    "coming VERB\n"
    "common ADJ\n"
    "community NOUN\n"
    "company NOUN\n"
    "completely ADV\n"
    "computer NOUN\n"
    "concerning ADP\n"
    "consider VERB\n"
    "considered VERB\n"
    "considers VERB\n"
    "constantly ADV\n"
    "continue VERB\n"
    "continued VERB\n"
    "continues VERB\n"
    "control NOUN\n"
    "cost NOUN\n"
    "could VERB\n"
    "country NOUN\n"
    "couple NOUN\n"
    "course NOUN\n"
    "court NOUN\n"
    "create VERB\n"
    "created VERB\n"
    "creates VERB\n"
    "crowd NOUN\n"
    "cultural ADJ\n"
    "cup NOUN\n"
    "current ADJ\n"
    "currently ADV\n"
    "cut VERB\n"
    "cuts VERB\n"
    "daily ADV\n"
    "dance NOUN\n"
    "dangerous ADJ\n"
    "dark ADJ\n"
    "data NOUN\n"
    "day NOUN\n"
    "dead ADJ\n"
    "deal VERB\n"
    "deals VERB\n"
    "dealt VERB\n"
    "death NOUN\n"
    "decide VERB\n"
    "decided VERB\n"
    "decides VERB\n"
    "decision NOUN\n"
    "deep ADJ\n"
    "degree NOUN\n"
    "desk NOUN\n"
    "despite ADP\n"
    "develop VERB\n"
    "developed VERB\n"
    "development NOUN\n"
    "develops VERB\n"
    "did VERB\n"
    "die VERB\n"
    "died VERB\n"
    "dies VERB\n"
    "difference NOUN\n"
    "different ADJ\n"
    "difficult ADJ\n"
    "difficulty NOUN\n"
    "dinner NOUN\n"
    "directly ADV\n"
    "director NOUN\n"
    "do VERB\n"
    "doctor NOUN\n"
    "does VERB\n"
    "dog NOUN\n"
    "doing VERB\n"
    "doll NOUN\n"
    "door NOUN\n"
    "down ADV\n"
    "dozen NUM\n"
    "dream NOUN\n"
    "dress NOUN\n"
    "drive VERB\n"
    "driven VERB\n"
    "drives VERB\n"
    "drove VERB\n"
    "drug NOUN\n"
    "during ADP\n"
    "each DET\n"
    "early ADJ\n"
    "easily ADV\n"
    "easy ADJ\n"
    "eat VERB\n"
    "eaten VERB\n"
    "eats VERB\n"
    "education NOUN\n"
    "effect NOUN\n"
    "effectively ADV\n"
    "effort NOUN\n"
    "eight NUM\n"
    "eighteen NUM\n"
    "eighty NUM\n"
    "either DET\n"
    "eleven NUM\n"
    "else ADV\n"
    "elsewhere ADV\n"
    "email NOUN\n"
    "end NOUN\n"
    "enemy NOUN\n"
    "energy NOUN\n"
    "engine NOUN\n"
    "enjoy VERB\n"
    "enjoyed VERB\n"
    "enjoys VERB\n"
    "enough DET\n"
    "entire ADJ\n"
    "environmental ADJ\n"
    "equally ADV\n"
    "equipment NOUN\n"
    "especially ADV\n"
    "essentially ADV\n"
    "even ADV\n"
    "event NOUN\n"
    "eventually ADV\n"
    "ever ADV\n"
    "every DET\n"
    "everybody PRON\n"
    "everyone PRON\n"
    "everything PRON\n"
    "everywhere ADV\n"
    "evidence NOUN\n"
    "exactly ADV\n"
    "exam NOUN\n"
    "except ADP\n"
    "expect VERB\n"
    "expected VERB\n"
    "expects VERB\n"
    "experience NOUN\n"
    "explain VERB\n"
    "explained VERB\n"
    "explains VERB\n"
    "extremely ADV\n"
    "eye NOUN\n"
    "face NOUN\n"
    "fact NOUN\n"
    "fairly ADV\n"
    "fall VERB\n"
    "fallen VERB\n"
    "falls VERB\n"
    "family NOUN\n"
    "far ADV\n"
    "farm NOUN\n"
    "father NOUN\n"
    "feel VERB\n"
    "feeling NOUN\n"
    "feels VERB\n"
    "fell VERB\n"
    "felt VERB\n"
    "few ADJ\n"
    "field NOUN\n"
    "fifteen NUM\n"
    "fifty NUM\n"
    "figure NOUN\n"
    "film NOUN\n"
    "finally ADV\n"
    "financial ADJ\n"
    "find VERB\n"
    "finds VERB\n"
    "fine ADJ\n"
    "fire NOUN\n"
    "first ADJ\n"
    "fish NOUN\n"
    "five NUM\n"
    "flat ADJ\n"
    "flower NOUN\n"
    "follow VERB\n"
    "followed VERB\n"
    "follows VERB\n"
    "food NOUN\n"
    "foot NOUN\n"
    "for ADP\n"
    "force NOUN\n"
    "foreign ADJ\n"
    "forever ADV\n"
    "fork NOUN\n"
    "form NOUN\n"
    "forty NUM\n"
    "found VERB\n"
    "four NUM\n"
    "fourteen NUM\n"
    "free ADJ\n"
    "frequently ADV\n"
    "friend NOUN\n"
    "friendship NOUN\n"
    "from ADP\n"
    "fruit NOUN\n"
    "full ADJ\n"
    "fully ADV\n"
    "further ADV\n"
    "furthermore ADV\n"
    "game NOUN\n"
    "garden NOUN\n"
    "gave VERB\n"
    "general ADJ\n"
    "generally ADV\n"
    "gently ADV\n"
    "get VERB\n"
    "gets VERB\n"
    "getting VERB\n"
    "gift NOUN\n"
    "girl NOUN\n"
    "give VERB\n"
    "given VERB\n"
    "gives VERB\n"
    "glad ADJ\n"
    "glass NOUN\n"
    "go VERB\n"
    "goal NOUN\n"
    "goes VERB\n"
    "going VERB\n"
    "gold NOUN\n"
    "gone VERB\n"
    "good ADJ\n"
    "got VERB\n"
    "gotten VERB\n"
    "government NOUN\n"
    "grade NOUN\n"
    "grass NOUN\n"
    "great ADJ\n"
    "greatly ADV\n"
    "green ADJ\n"
    "grew VERB\n"
    "ground NOUN\n"
    "group NOUN\n"
    "grow VERB\n"
    "grown VERB\n"
    "grows VERB\n"
    "guest NOUN\n"
    "guy NOUN\n"
    "had VERB\n"
    "half DET\n"
    "hand NOUN\n"
    "happen VERB\n"
    "happened VERB\n"
    "happens VERB\n"
    "happy ADJ\n"
    "hard ADJ\n"
    "has VERB\n"
    "hat NOUN\n"
    "have VERB\n"
    "having VERB\n"
    "he PRON\n"
    "head NOUN\n"
    "health NOUN\n"
    "healthy ADJ\n"
    "hear VERB\n"
    "heard VERB\n"
    "hears VERB\n"
    "heart NOUN\n"
    "held VERB\n"
    "help VERB\n"
    "helped VERB\n"
    "helps VERB\n"
    "her PRON\n"
    "here ADV\n"
    "hero NOUN\n"
    "hers PRON\n"
    "herself PRON\n"
    "high ADJ\n"
    "highly ADV\n"
    "him PRON\n"
    "himself PRON\n"
    "his PRON\n"
    "history NOUN\n"
    "hit VERB\n"
    "hits VERB\n"
    "hold VERB\n"
    "holds VERB\n"
    "home NOUN\n"
    "hope VERB\n"
    "hoped VERB\n"
    "hopefully ADV\n"
    "hopes VERB\n"
    "horse NOUN\n"
    "hospital NOUN\n"
    "hot ADJ\n"
    "hour NOUN\n"
    "house NOUN\n"
    "how ADV\n"
    "however ADV\n"
    "human ADJ\n"
    "hundred NUM\n"
    "hungry ADJ\n"
    "i PRON\n"
    "idea NOUN\n"
    "if CONJ\n"
    "image NOUN\n"
    "immediately ADV\n"
    "important ADJ\n"
    "in ADP\n"
    "include VERB\n"
    "included VERB\n"
    "includes VERB\n"
    "indeed ADV\n"
    "industry NOUN\n"
    "information NOUN\n"
    "initially ADV\n"
    "inside ADP\n"
    "instead ADV\n"
    "interest NOUN\n"
    "internet NOUN\n"
    "into ADP\n"
    "iron NOUN\n"
    "is VERB\n"
    "island NOUN\n"
    "issue NOUN\n"
    "it PRON\n"
    "item NOUN\n"
    "its PRON\n"
    "itself PRON\n"
    "job NOUN\n"
    "just ADV\n"
    "keep VERB\n"
    "keeps VERB\n"
    "kept VERB\n"
    "key NOUN\n"
    "kid NOUN\n"
    "kill VERB\n"
    "killed VERB\n"
    "kills VERB\n"
    "kind NOUN\n"
    "king NOUN\n"
    "kitchen NOUN\n"
    "knew VERB\n"
    "knife NOUN\n"
    "know VERB\n"
    "knowing VERB\n"
    "known VERB\n"
    "knows VERB\n"
    "lamp NOUN\n"
    "land NOUN\n"
    "language NOUN\n"
    "large ADJ\n"
    "last ADJ\n"
    "late ADJ\n"
    "later ADV\n"
    "law NOUN\n"
    "lead VERB\n"
    "leader NOUN\n"
    "leads VERB\n"
    "learn VERB\n"
    "learned VERB\n"
    "learns VERB\n"
    "least ADV\n"
    "leave VERB\n"
    "leaves VERB\n"
    "led VERB\n"
    "left VERB\n"
    "legal ADJ\n"
    "less ADV\n"
    "lesson NOUN\n"
    "lest CONJ\n"
    "let's PRT\n"
    "letter NOUN\n"
    "level NOUN\n"
    "life NOUN\n"
    "light ADJ\n"
    "likely ADV\n"
    "line NOUN\n"
    "literally ADV\n"
    "little ADJ\n"
    "live VERB\n"
    "lived VERB\n"
    "lives VERB\n"
    "local ADJ\n"
    "lock NOUN\n"
    "long ADJ\n"
    "longer ADV\n"
    "lose VERB\n"
    "loser NOUN\n"
    "loses VERB\n"
    "lost VERB\n"
    "lot NOUN\n"
    "loud ADJ\n"
    "love VERB\n"
    "loved VERB\n"
    "loves VERB\n"
    "low ADJ\n"
    "lunch NOUN\n"
    "machine NOUN\n"
    "made VERB\n"
    "magazine NOUN\n"
    "mainly ADV\n"
    "major ADJ\n"
    "make VERB\n"
    "makes VERB\n"
    "making VERB\n"
    "man NOUN\n"
    "map NOUN\n"
    "market NOUN\n"
    "math NOUN\n"
    "matter NOUN\n"
    "may VERB\n"
    "maybe ADV\n"
    "me PRON\n"
    "mean VERB\n"
    "means VERB\n"
    "meant VERB\n"
    "meanwhile ADV\n"
    "meat NOUN\n"
    "medicine NOUN\n"
    "meet VERB\n"
    "meets VERB\n"
    "member NOUN\n"
    "merely ADV\n"
    "message NOUN\n"
    "met VERB\n"
    "might VERB\n"
    "military ADJ\n"
    "milk NOUN\n"
    "million NUM\n"
    "mind NOUN\n"
    "mine PRON\n"
    "minute NOUN\n"
    "model NOUN\n"
    "modern ADJ\n"
    "moment NOUN\n"
    "money NOUN\n"
    "month NOUN\n"
    "moon NOUN\n"
    "more ADV\n"
    "moreover ADV\n"
    "morning NOUN\n"
    "most ADV\n"
    "mostly ADV\n"
    "mother NOUN\n"
    "mountain NOUN\n"
    "move VERB\n"
    "moved VERB\n"
    "moves VERB\n"
    "movie NOUN\n"
    "music NOUN\n"
    "must VERB\n"
    "my PRON\n"
    "myself PRON\n"
    "n't PRT\n"
    "name NOUN\n"
    "nation NOUN\n"
    "national ADJ\n"
    "natural ADJ\n"
    "naturally ADV\n"
    "nature NOUN\n"
    "near ADP\n"
    "nearly ADV\n"
    "necessarily ADV\n"
    "need VERB\n"
    "needed VERB\n"
    "needs VERB\n"
    "neighbor NOUN\n"
    "neither DET\n"
    "never ADV\n"
    "nevertheless ADV\n"
    "new ADJ\n"
    "news NOUN\n"
    "newspaper NOUN\n"
    "next ADJ\n"
    "nice ADJ\n"
    "night NOUN\n"
    "nine NUM\n"
    "nineteen NUM\n"
    "ninety NUM\n"
    "no DET\n"
    "nobody PRON\n"
    "none PRON\n"
    "nonetheless ADV\n"
    "nor CONJ\n"
    "normally ADV\n"
    "north NOUN\n"
    "not PRT\n"
    "nothing PRON\n"
    "novel NOUN\n"
    "now ADV\n"
    "nowhere ADV\n"
    "number NOUN\n"
    "obviously ADV\n"
    "occasionally ADV\n"
    "ocean NOUN\n"
    "of ADP\n"
    "off ADP\n"
    "offer VERB\n"
    "offered VERB\n"
    "offers VERB\n"
    "office NOUN\n"
    "official NOUN\n"
    "often ADV\n"
    "oil NOUN\n"
    "old ADJ\n"
    "on ADP\n"
    "once ADV\n"
    "one NUM\n"
    "one's PRON\n"
    "oneself PRON\n"
    "only ADJ\n"
    "onto ADP\n"
    "open VERB\n"
    "opened VERB\n"
    "opens VERB\n"
    "or CONJ\n"
    "orange NOUN\n"
    "originally ADV\n"
    "other ADJ\n"
    "others NOUN\n"
    "otherwise ADV\n"
    "our PRON\n"
    "ours PRON\n"
    "ourselves PRON\n"
    "out ADP\n"
    "outside ADP\n"
    "over ADP\n"
    "own ADJ\n"
    "page NOUN\n"
    "paid VERB\n"
    "paper NOUN\n"
    "parent NOUN\n"
    "part NOUN\n"
    "party NOUN\n"
    "pass VERB\n"
    "passed VERB\n"
    "passes VERB\n"
    "past ADJ\n"
    "patient NOUN\n"
    "pay VERB\n"
    "pays VERB\n"
    "peace NOUN\n"
    "pen NOUN\n"
    "pencil NOUN\n"
    "people NOUN\n"
    "per ADP\n"
    "perhaps ADV\n"
    "period NOUN\n"
    "person NOUN\n"
    "personal ADJ\n"
    "personally ADV\n"
    "phone NOUN\n"
    "photo NOUN\n"
    "physical ADJ\n"
    "physics NOUN\n"
    "picture NOUN\n"
    "piece NOUN\n"
    "place NOUN\n"
    "plan NOUN\n"
    "plane NOUN\n"
    "plant NOUN\n"
    "plate NOUN\n"
    "play VERB\n"
    "played VERB\n"
    "player NOUN\n"
    "plays VERB\n"
    "plus ADP\n"
    "pocket NOUN\n"
    "poem NOUN\n"
    "poet NOUN\n"
    "point NOUN\n"
    "police NOUN\n"
    "policy NOUN\n"
    "political ADJ\n"
    "poor ADJ\n"
    "popular ADJ\n"
    "position NOUN\n"
    "possible ADJ\n"
    "possibly ADV\n"
    "power NOUN\n"
    "practice NOUN\n"
    "president NOUN\n"
    "pretty ADJ\n"
    "price NOUN\n"
    "primarily ADV\n"
    "prince NOUN\n"
    "princess NOUN\n"
    "private ADJ\n"
    "prize NOUN\n"
    "probably ADV\n"
    "problem NOUN\n"
    "process NOUN\n"
    "produce NOUN\n"
    "product NOUN\n"
    "professor NOUN\n"
    "program NOUN\n"
    "project NOUN\n"
    "properly ADV\n"
    "proud ADJ\n"
    "prove VERB\n"
    "proved VERB\n"
    "proves VERB\n"
    "provide VERB\n"
    "provided VERB\n"
    "provides VERB\n"
    "public ADJ\n"
    "pull VERB\n"
    "pulled VERB\n"
    "pulls VERB\n"
    "put VERB\n"
    "puts VERB\n"
    "queen NOUN\n"
    "question NOUN\n"
    "quick ADJ\n"
    "quickly ADV\n"
    "quiet ADJ\n"
    "quite ADV\n"
    "radio NOUN\n"
    "rain NOUN\n"
    "raise VERB\n"
    "raised VERB\n"
    "raises VERB\n"
    "ran VERB\n"
    "rarely ADV\n"
    "rate NOUN\n"
    "rather ADV\n"
    "reach VERB\n"
    "reached VERB\n"
    "reaches VERB\n"
    "read VERB\n"
    "reader NOUN\n"
    "reads VERB\n"
    "ready ADJ\n"
    "real ADJ\n"
    "realize NOUN\n"
    "really ADV\n"
    "reason NOUN\n"
    "receive VERB\n"
    "received VERB\n"
    "receives VERB\n"
    "recent ADJ\n"
    "recently ADV\n"
    "record NOUN\n"
    "red ADJ\n"
    "regarding ADP\n"
    "regularly ADV\n"
    "relationship NOUN\n"
    "relatively ADV\n"
    "religious ADJ\n"
    "remain VERB\n"
    "remained VERB\n"
    "remains VERB\n"
    "remember VERB\n"
    "remembered VERB\n"
    "remembers VERB\n"
    "report VERB\n"
    "reported VERB\n"
    "reports VERB\n"
    "require VERB\n"
    "required VERB\n"
    "requires VERB\n"
    "research NOUN\n"
    "result NOUN\n"
    "rich ADJ\n"
    "right ADJ\n"
    "river NOUN\n"
    "road NOUN\n"
    "rock NOUN\n"
    "role NOUN\n"
    "room NOUN\n"
    "roughly ADV\n"
    "run VERB\n"
    "runs VERB\n"
    "safe ADJ\n"
    "said VERB\n"
    "salt NOUN\n"
    "same ADJ\n"
    "sand NOUN\n"
    "sat VERB\n"
    "saw VERB\n"
    "say VERB\n"
    "says VERB\n"
    "school NOUN\n"
    "science NOUN\n"
    "screen NOUN\n"
    "sea NOUN\n"
    "season NOUN\n"
    "secretary NOUN\n"
    "see VERB\n"
    "seeing VERB\n"
    "seem VERB\n"
    "seemed VERB\n"
    "seems VERB\n"
    "seen VERB\n"
    "sees VERB\n"
    "sell VERB\n"
    "sells VERB\n"
    "send VERB\n"
    "sends VERB\n"
    "sense NOUN\n"
    "sent VERB\n"
    "serious ADJ\n"
    "seriously ADV\n"
    "serve VERB\n"
    "served VERB\n"
    "serves VERB\n"
    "service NOUN\n"
    "set VERB\n"
    "sets VERB\n"
    "seven NUM\n"
    "seventeen NUM\n"
    "seventy NUM\n"
    "several DET\n"
    "shall VERB\n"
    "she PRON\n"
    "ship NOUN\n"
    "shirt NOUN\n"
    "shoe NOUN\n"
    "shop NOUN\n"
    "short ADJ\n"
    "should VERB\n"
    "show VERB\n"
    "showed VERB\n"
    "shown VERB\n"
    "shows VERB\n"
    "sick ADJ\n"
    "side NOUN\n"
    "significant ADJ\n"
    "significantly ADV\n"
    "silver NOUN\n"
    "similar ADJ\n"
    "similarly ADV\n"
    "simple ADJ\n"
    "simply ADV\n"
    "since CONJ\n"
    "single ADJ\n"
    "sit VERB\n"
    "site NOUN\n"
    "sits VERB\n"
    "situation NOUN\n"
    "six NUM\n"
    "sixteen NUM\n"
    "sixty NUM\n"
    "skill NOUN\n"
    "sky NOUN\n"
    "sleep NOUN\n"
    "slightly ADV\n"
    "slow ADJ\n"
    "slowly ADV\n"
    "small ADJ\n"
    "smell NOUN\n"
    "snow NOUN\n"
    "social ADJ\n"
    "society NOUN\n"
    "sold VERB\n"
    "soldier NOUN\n"
    "some DET\n"
    "somebody PRON\n"
    "someone PRON\n"
    "something PRON\n"
    "sometimes ADV\n"
    "somewhat ADV\n"
    "somewhere ADV\n"
    "son NOUN\n"
    "song NOUN\n"
    "soon ADV\n"
    "sorry ADJ\n"
    "sound NOUN\n"
    "south NOUN\n"
    "space NOUN\n"
    "speak VERB\n"
    "speaks VERB\n"
    "specific ADJ\n"
    "specifically ADV\n"
    "spend VERB\n"
    "spends VERB\n"
    "spent VERB\n"
    "spoke VERB\n"
    "spoken VERB\n"
    "spoon NOUN\n"
    "stage NOUN\n"
    "stand VERB\n"
    "stands VERB\n"
    "star NOUN\n"
    "start VERB\n"
    "started VERB\n"
    "starts VERB\n"
    "state NOUN\n"
    "station NOUN\n"
    "stay VERB\n"
    "stayed VERB\n"
    "stays VERB\n"
    "still ADV\n"
    "stone NOUN\n"
    "stood VERB\n"
    "stop VERB\n"
    "stopped VERB\n"
    "stops VERB\n"
    "store NOUN\n"
    "story NOUN\n"
    "strange ADJ\n"
    "stranger NOUN\n"
    "street NOUN\n"
    "strong ADJ\n"
    "student NOUN\n"
    "study NOUN\n"
    "successful ADJ\n"
    "such DET\n"
    "sugar NOUN\n"
    "suggest VERB\n"
    "suggested VERB\n"
    "suggests VERB\n"
    "summer NOUN\n"
    "sun NOUN\n"
    "support VERB\n"
    "supported VERB\n"
    "supports VERB\n"
    "sure ADJ\n"
    "system NOUN\n"
    "table NOUN\n"
    "take VERB\n"
    "taken VERB\n"
    "takes VERB\n"
    "taking VERB\n"
    "talent NOUN\n"
    "talk VERB\n"
    "talked VERB\n"
    "talks VERB\n"
    "tall ADJ\n"
    "taste NOUN\n"
    "tax NOUN\n"
    "tea NOUN\n"
    "teacher NOUN\n"
    "team NOUN\n"
    "television NOUN\n"
    "tell VERB\n"
    "tells VERB\n"
    "ten NUM\n"
    "test NOUN\n"
    "than CONJ\n"
    "thank VERB\n"
    "thanks VERB\n"
    "that DET\n"
    "the DET\n"
    "their PRON\n"
    "theirs PRON\n"
    "them PRON\n"
    "themselves PRON\n"
    "then ADV\n"
    "there ADV\n"
    "therefore ADV\n"
    "these DET\n"
    "they PRON\n"
    "thing NOUN\n"
    "think VERB\n"
    "thinking VERB\n"
    "thinks VERB\n"
    "thirsty ADJ\n"
    "thirteen NUM\n"
    "thirty NUM\n"
    "this DET\n"
    "those DET\n"
    "though CONJ\n"
    "thought VERB\n"
    "thousand NUM\n"
    "three NUM\n"
    "through ADP\n"
    "throughout ADP\n"
    "thus ADV\n"
    "time NOUN\n"
    "tired ADJ\n"
    "to ADP\n"
    "today ADV\n"
    "together ADV\n"
    "told VERB\n"
    "tomorrow ADV\n"
    "too ADV\n"
    "took VERB\n"
    "totally ADV\n"
    "touch NOUN\n"
    "toward ADP\n"
    "towards ADP\n"
    "town NOUN\n"
    "toy NOUN\n"
    "traditional ADJ\n"
    "train NOUN\n"
    "tree NOUN\n"
    "tried VERB\n"
    "tries VERB\n"
    "trillion NUM\n"
    "true ADJ\n"
    "try VERB\n"
    "trying VERB\n"
    "turn VERB\n"
    "turned VERB\n"
    "turns VERB\n"
    "twelve NUM\n"
    "twenty NUM\n"
    "twice ADV\n"
    "two NUM\n"
    "ultimately ADV\n"
    "under ADP\n"
    "underneath ADP\n"
    "understand VERB\n"
    "understands VERB\n"
    "understood VERB\n"
    "unit NOUN\n"
    "university NOUN\n"
    "unless CONJ\n"
    "unto ADP\n"
    "up ADV\n"
    "upon ADP\n"
    "us PRON\n"
    "use VERB\n"
    "used VERB\n"
    "uses VERB\n"
    "using VERB\n"
    "usually ADV\n"
    "value NOUN\n"
    "very ADV\n"
    "via ADP\n"
    "video NOUN\n"
    "view NOUN\n"
    "village NOUN\n"
    "visitor NOUN\n"
    "voice NOUN\n"
    "wait VERB\n"
    "waited VERB\n"
    "waits VERB\n"
    "walk VERB\n"
    "walked VERB\n"
    "walks VERB\n"
    "wall NOUN\n"
    "want VERB\n"
    "wanted VERB\n"
    "wants VERB\n"
    "war NOUN\n"
    "warm ADJ\n"
    "was VERB\n"
    "watch VERB\n"
    "watched VERB\n"
    "watches VERB\n"
    "water NOUN\n"
    "way NOUN\n"
    "we PRON\n"
    "weapon NOUN\n"
    "wear VERB\n"
    "wears VERB\n"
    "website NOUN\n"
    "week NOUN\n"
    "well ADV\n"
    "went VERB\n"
    "were VERB\n"
    "what PRON\n"
    "whatever DET\n"
    "wheel NOUN\n"
    "whereas CONJ\n"
    "whether CONJ\n"
    "which DET\n"
    "whichever DET\n"
    "while CONJ\n"
    "white ADJ\n"
    "who PRON\n"
    "whoever PRON\n"
    "whole ADJ\n"
    "whom PRON\n"
    "whomever PRON\n"
    "whose PRON\n"
    "why ADV\n"
    "wide ADJ\n"
    "widely ADV\n"
    "wife NOUN\n"
    "will VERB\n"
    "win VERB\n"
    "wind NOUN\n"
    "window NOUN\n"
    "wine NOUN\n"
    "winner NOUN\n"
    "wins VERB\n"
    "wish VERB\n"
    "wished VERB\n"
    "wishes VERB\n"
    "with ADP\n"
    "within ADP\n"
    "without ADP\n"
    "woman NOUN\n"
    "won VERB\n"
    "wonder VERB\n"
    "wondered VERB\n"
    "wonderful ADJ\n"
    "wood NOUN\n"
    "word NOUN\n"
    "wore VERB\n"
    "work VERB\n"
    "worked VERB\n"
    "worker NOUN\n"
    "works VERB\n"
    "world NOUN\n"
    "worn VERB\n"
    "would VERB\n"
    "write VERB\n"
    "writer NOUN\n"
    "writes VERB\n"
    "written VERB\n"
    "wrong ADJ\n"
    "wrote VERB\n"
    "yard NOUN\n"
    "year NOUN\n"
    "yellow ADJ\n"
    "yes ADV\n"
    "yesterday ADV\n"
    "yet CONJ\n"
    "you PRON\n"
    "young ADJ\n"
    "your PRON\n"
    "yours PRON\n"
    "yourself PRON\n"
    "yourselves PRON\n"
    "zero NUM\n";

}  // namespace autotext::data
