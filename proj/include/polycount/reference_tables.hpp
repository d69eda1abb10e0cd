#pragma once

// Embedded reference values for the two-variable counts over small fields,
// used by `polycount verify tables` and the acceptance suite. Values are
// stored as decimal strings (many exceed 64 bits) together with their
// coordinates; see the repository README for this file's checksum.

#include <cstddef>

namespace polycount::tables {

// Irreducible counts, two variables, total degree: value = count at (q, m).
struct IrreducibleTotalEntry {
  unsigned q;
  unsigned m;
  const char* value;
};

inline constexpr IrreducibleTotalEntry kIrreducibleTotalK2[] = {
    {2, 0, "0"},
    {2, 1, "6"},
    {2, 2, "35"},
    {2, 3, "694"},
    {2, 4, "26089"},
    {2, 5, "1862994"},
    {2, 6, "253247715"},
    {2, 7, "66799608630"},
    {2, 8, "34698378752226"},
    {2, 9, "35781375988234520"},
    {2, 10, "73534241823793715433"},
    {3, 0, "0"},
    {3, 1, "12"},
    {3, 2, "273"},
    {3, 3, "25520"},
    {3, 4, "6778629"},
    {3, 5, "5132148528"},
    {3, 6, "11368775698280"},
    {3, 7, "74897449398451680"},
    {3, 8, "1476178370884382958936"},
    {3, 9, "87205387550224830516286800"},
    {3, 10, "15450442981642705273095610563240"},
    {4, 0, "0"},
    {4, 1, "20"},
    {4, 2, "1134"},
    {4, 3, "323940"},
    {4, 4, "350195076"},
    {4, 5, "1458203653116"},
    {4, 6, "23988036558291750"},
    {4, 7, "1573616297933972778420"},
    {4, 8, "412613600502090075171985440"},
    {4, 9, "432682737835397726783364117773760"},
    {4, 10, "1814830203343733351868975985798075240938"},
    {5, 0, "0"},
    {5, 1, "30"},
    {5, 2, "3410"},
    {5, 3, "2330240"},
    {5, 4, "7549603600"},
    {5, 5, "118965950703744"},
    {5, 6, "9309505329218297280"},
    {5, 7, "3637689729211851543816960"},
    {5, 8, "7105314552536912564123328420000"},
    {5, 9, "69388718760088702173445263653542192000"},
    {5, 10, "3388129637939157475672361687005401831354725568"},
};

// Relatively-prime pair counts, two variables, total degree, q = 2:
// `pairs` is the pair count at (m; n), `product` is the product of the
// normalized counts at m and n (the saturation value). Lower triangle n <= m;
// the pair count is symmetric in (m, n).
struct CoprimeTotalEntry {
  unsigned m;
  unsigned n;
  const char* pairs;
  const char* product;
};

inline constexpr CoprimeTotalEntry kCoprimeTotalK2Q2[] = {
    {0, 0, "1", "1"},
    {1, 0, "6", "6"},
    {1, 1, "30", "36"},
    {2, 0, "56", "56"},
    {2, 1, "300", "336"},
    {2, 2, "2900", "3136"},
    {3, 0, "960", "960"},
    {3, 1, "5424", "5760"},
    {3, 2, "51624", "53760"},
    {3, 3, "901560", "921600"},
    {4, 0, "31744", "31744"},
    {4, 1, "184704", "190464"},
    {4, 2, "1741984", "1777664"},
    {4, 3, "30141936", "30474240"},
    {4, 4, "1002049232", "1007681536"},
    {5, 0, "2064384", "2064384"},
    {5, 1, "12195840", "12386304"},
    {5, 2, "114443520", "115605504"},
    {5, 3, "1970999232", "1981808640"},
    {5, 4, "65347584672", "65531805696"},
    {5, 5, "4255612716000", "4261681299456"},
};

// Irreducible counts, two variables, vector degree (m1, m2), q = 2;
// m1 <= m2 (the count is symmetric under swapping the two components).
struct IrreducibleVecEntry {
  unsigned m1;
  unsigned m2;
  const char* value;
};

inline constexpr IrreducibleVecEntry kIrreducibleVecQ2[] = {
    {0, 0, "0"},
    {0, 1, "2"},
    {0, 2, "1"},
    {0, 3, "2"},
    {0, 4, "3"},
    {0, 5, "6"},
    {1, 1, "6"},
    {1, 2, "24"},
    {1, 3, "96"},
    {1, 4, "384"},
    {1, 5, "1536"},
    {2, 2, "243"},
    {2, 3, "2256"},
    {2, 4, "19476"},
    {2, 5, "162816"},
    {3, 3, "43798"},
    {3, 4, "774240"},
    {3, 5, "13042176"},
    {4, 4, "27518145"},
    {4, 5, "927161664"},
    {5, 5, "62409885906"},
};

// Relatively-prime pair counts at vector degrees ((m1,m2); (n1,n2)), q = 2,
// all components <= 4. One entry per equivalence class under swapping the
// two degree vectors and relabeling the two variables simultaneously.
struct CoprimeVecEntry {
  unsigned m1;
  unsigned m2;
  unsigned n1;
  unsigned n2;
  const char* value;
};

inline constexpr CoprimeVecEntry kCoprimeVecQ2[] = {
    // (m1,m2);(n1,n2) with m1 < min(m2, n1, n2)
    {0, 1, 1, 1, "16"},
    {0, 1, 1, 2, "68"},
    {0, 1, 1, 3, "280"},
    {0, 1, 1, 4, "1136"},
    {0, 1, 2, 1, "80"},
    {0, 1, 2, 2, "712"},
    {0, 1, 2, 3, "5984"},
    {0, 1, 2, 4, "49024"},
    {0, 1, 3, 1, "352"},
    {0, 1, 3, 2, "6416"},
    {0, 1, 3, 3, "108928"},
    {0, 1, 3, 4, "1793024"},
    {0, 1, 4, 1, "1472"},
    {0, 1, 4, 2, "54304"},
    {0, 1, 4, 3, "1852928"},
    {0, 1, 4, 4, "61136896"},
    {0, 2, 1, 1, "32"},
    {0, 2, 1, 2, "136"},
    {0, 2, 1, 3, "560"},
    {0, 2, 1, 4, "2272"},
    {0, 2, 2, 1, "160"},
    {0, 2, 2, 2, "1424"},
    {0, 2, 2, 3, "11968"},
    {0, 2, 2, 4, "98048"},
    {0, 2, 3, 1, "704"},
    {0, 2, 3, 2, "12832"},
    {0, 2, 3, 3, "217856"},
    {0, 2, 3, 4, "3586048"},
    {0, 2, 4, 1, "2944"},
    {0, 2, 4, 2, "108608"},
    {0, 2, 4, 3, "3705856"},
    {0, 2, 4, 4, "122273792"},
    {0, 3, 1, 1, "64"},
    {0, 3, 1, 2, "272"},
    {0, 3, 1, 3, "1120"},
    {0, 3, 1, 4, "4544"},
    {0, 3, 2, 1, "320"},
    {0, 3, 2, 2, "2848"},
    {0, 3, 2, 3, "23936"},
    {0, 3, 2, 4, "196096"},
    {0, 3, 3, 1, "1408"},
    {0, 3, 3, 2, "25664"},
    {0, 3, 3, 3, "435712"},
    {0, 3, 3, 4, "7172096"},
    {0, 3, 4, 1, "5888"},
    {0, 3, 4, 2, "217216"},
    {0, 3, 4, 3, "7411712"},
    {0, 3, 4, 4, "244547584"},
    {0, 4, 1, 1, "128"},
    {0, 4, 1, 2, "544"},
    {0, 4, 1, 3, "2240"},
    {0, 4, 1, 4, "9088"},
    {0, 4, 2, 1, "640"},
    {0, 4, 2, 2, "5696"},
    {0, 4, 2, 3, "47872"},
    {0, 4, 2, 4, "392192"},
    {0, 4, 3, 1, "2816"},
    {0, 4, 3, 2, "51328"},
    {0, 4, 3, 3, "871424"},
    {0, 4, 3, 4, "14344192"},
    {0, 4, 4, 1, "11776"},
    {0, 4, 4, 2, "434432"},
    {0, 4, 4, 3, "14823424"},
    {0, 4, 4, 4, "489095168"},
    {1, 2, 2, 2, "16304"},
    {1, 2, 2, 3, "139480"},
    {1, 2, 2, 4, "1152656"},
    {1, 2, 3, 2, "142144"},
    {1, 2, 3, 3, "2448560"},
    {1, 2, 3, 4, "40593472"},
    {1, 2, 4, 2, "1184768"},
    {1, 2, 4, 3, "40955488"},
    {1, 2, 4, 4, "1360009472"},
    {1, 3, 2, 2, "68896"},
    {1, 3, 2, 3, "585296"},
    {1, 3, 2, 4, "4820800"},
    {1, 3, 3, 2, "601088"},
    {1, 3, 3, 3, "10288288"},
    {1, 3, 3, 4, "170027072"},
    {1, 3, 4, 2, "5012224"},
    {1, 3, 4, 3, "172190528"},
    {1, 3, 4, 4, "5700390784"},
    {1, 4, 2, 2, "282944"},
    {1, 4, 2, 3, "2396320"},
    {1, 4, 2, 4, "19705088"},
    {1, 4, 3, 2, "2469376"},
    {1, 4, 3, 3, "42142016"},
    {1, 4, 3, 4, "695422336"},
    {1, 4, 4, 2, "20595200"},
    {1, 4, 4, 3, "705500800"},
    {1, 4, 4, 4, "23322302720"},
    {2, 3, 3, 3, "192236480"},
    {2, 3, 3, 4, "3180273904"},
    {2, 3, 4, 3, "3193241536"},
    {2, 3, 4, 4, "105804817760"},
    {2, 4, 3, 3, "1586111872"},
    {2, 4, 3, 4, "26194635488"},
    {2, 4, 4, 3, "26352940928"},
    {2, 4, 4, 4, "871678913728"},
    {3, 4, 4, 4, "29920251144512"},
    // (a,a);(b,c) with a < b <= c
    {0, 0, 1, 1, "10"},
    {0, 0, 1, 2, "44"},
    {0, 0, 1, 3, "184"},
    {0, 0, 1, 4, "752"},
    {0, 0, 2, 2, "400"},
    {0, 0, 2, 3, "3392"},
    {0, 0, 2, 4, "27904"},
    {0, 0, 3, 3, "57856"},
    {0, 0, 3, 4, "954368"},
    {0, 0, 4, 4, "31522816"},
    {1, 1, 2, 2, "3628"},
    {1, 1, 2, 3, "31496"},
    {1, 1, 2, 4, "262096"},
    {1, 1, 3, 3, "550624"},
    {1, 1, 3, 4, "9193856"},
    {1, 1, 4, 4, "307477504"},
    {2, 2, 3, 3, "22533736"},
    {2, 2, 3, 4, "374111600"},
    {2, 2, 4, 4, "12439775296"},
    {3, 3, 4, 4, "1810783999024"},
    // (a,b);(a,c) with a < b <= c
    {0, 1, 0, 1, "2"},
    {0, 1, 0, 2, "4"},
    {0, 1, 0, 3, "8"},
    {0, 1, 0, 4, "16"},
    {0, 2, 0, 2, "8"},
    {0, 2, 0, 3, "16"},
    {0, 2, 0, 4, "32"},
    {0, 3, 0, 3, "32"},
    {0, 3, 0, 4, "64"},
    {0, 4, 0, 4, "128"},
    {1, 2, 1, 2, "1684"},
    {1, 2, 1, 3, "7112"},
    {1, 2, 1, 4, "29200"},
    {1, 3, 1, 3, "29728"},
    {1, 3, 1, 4, "121664"},
    {1, 4, 1, 4, "496576"},
    {2, 3, 2, 3, "11110312"},
    {2, 3, 2, 4, "91632848"},
    {2, 4, 2, 4, "754370848"},
    {3, 4, 3, 4, "902539626256"},
    // (a,b);(c,a) with a < b <= c
    {0, 1, 1, 0, "4"},
    {0, 1, 2, 0, "8"},
    {0, 1, 3, 0, "16"},
    {0, 1, 4, 0, "32"},
    {0, 2, 2, 0, "16"},
    {0, 2, 3, 0, "32"},
    {0, 2, 4, 0, "64"},
    {0, 3, 3, 0, "64"},
    {0, 3, 4, 0, "128"},
    {0, 4, 4, 0, "256"},
    {1, 2, 2, 1, "1768"},
    {1, 2, 3, 1, "7568"},
    {1, 2, 4, 1, "31264"},
    {1, 3, 3, 1, "32416"},
    {1, 3, 4, 1, "133952"},
    {1, 4, 4, 1, "553600"},
    {2, 3, 3, 2, "11205808"},
    {2, 3, 4, 2, "92780000"},
    {2, 4, 4, 2, "768351424"},
    {3, 4, 4, 3, "904335248800"},
    // (a,a);(a,b) with a <= b
    {0, 0, 0, 0, "1"},
    {0, 0, 0, 1, "2"},
    {0, 0, 0, 2, "4"},
    {0, 0, 0, 3, "8"},
    {0, 0, 0, 4, "16"},
    {1, 1, 1, 1, "82"},
    {1, 1, 1, 2, "380"},
    {1, 1, 1, 3, "1624"},
    {1, 1, 1, 4, "6704"},
    {2, 2, 2, 2, "151804"},
    {2, 2, 2, 3, "1303880"},
    {2, 2, 2, 4, "10791376"},
    {3, 3, 3, 3, "3300863752"},
    {3, 3, 3, 4, "54630906416"},
    {4, 4, 4, 4, "990037617138928"},
};

inline constexpr std::size_t kIrreducibleTotalK2Count =
    sizeof(kIrreducibleTotalK2) / sizeof(kIrreducibleTotalK2[0]);
inline constexpr std::size_t kCoprimeTotalK2Q2Count =
    sizeof(kCoprimeTotalK2Q2) / sizeof(kCoprimeTotalK2Q2[0]);
inline constexpr std::size_t kIrreducibleVecQ2Count =
    sizeof(kIrreducibleVecQ2) / sizeof(kIrreducibleVecQ2[0]);
inline constexpr std::size_t kCoprimeVecQ2Count =
    sizeof(kCoprimeVecQ2) / sizeof(kCoprimeVecQ2[0]);

static_assert(kIrreducibleTotalK2Count == 44);
static_assert(kCoprimeTotalK2Q2Count == 21);
static_assert(kIrreducibleVecQ2Count == 21);
static_assert(kCoprimeVecQ2Count == 175);

}  // namespace polycount::tables
