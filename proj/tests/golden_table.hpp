#pragma once

#include <map>
#include <string>

// Published half tables [c_0 .. c_delta] of A_n for 3 <= n <= 20, one
// decimal string per n in the "[c0,c1,...]" text rendering.
inline const std::map<int, std::string>& golden_tables() {
  static const std::map<int, std::string> table = {
      {3, "[1]"},
      {4, "[1]"},
      {5, "[1,0,0,0,0,0,-1]"},
      {6, "[1,1,0,-1,-1]"},
      {7, "[1,0,0,0,0,0,-1,0,2,0,-1,0,5,0,2,0,6]"},
      {8, "[1,1,0,-1,-1,0,1,1,1]"},
      {9, "[1,0,0,0,1,0,-1,0,5,0,3,0,18,0,15,0,44,0,43,0,82,0,76,0,122,0,107,0,147,0,119]"},
      {10, "[1,1,0,-1,-1,-1,2,2,4,6,10,10,16,15,16,16,19,15]"},
      {11, "[1,0,0,0,1,0,-1,0,10,0,11,0,58,0,85,0,222,0,336,0,660,0,951,0,1589,0,2154,0,3188,0,4080,0,5510,0,6633,0,8310,0,9443,0,11059,0,11894,0,13094,0,13319,0,13852]"},
      {12, "[1,1,0,0,1,1,3,7,11,15,25,35,50,70,95,121,156,191,229,266,304,332,358,371,377]"},
      {13, "[1,0,0,0,1,0,-1,0,19,0,31,0,157,0,321,0,885,0,1756,0,3794,0,6856,0,12788,0,21324,0,35633,0,55326,0,85174,0,124064,0,178645,0,246238,0,334814,0,439321,0,568305,0,712862,0,881834,0,1061455,0,1259989,0,1459221,0,1666984,0,1860904,0,2049854,0,2209072,0,2349306,0,2446352,0,2514111,0,2530530]"},
      {14, "[1,1,0,-1,0,0,5,8,21,34,69,107,193,295,477,705,1064,1490,2121,2865,3876,5040,6535,8186,10217,12379,14898,17490,20381,23197,26216,28992,31799,34192,36461,38127,39559,40263,40636]"},
      {15, "[1,0,0,0,2,0,0,0,32,0,76,0,378,0,995,0,3048,0,7294,0,17681,0,37736,0,78903,0,152321,0,285968,0,507762,0,876759,0,1451423,0,2341739,0,3653241,0,5568497,0,8254649,0,11983447,0,16987847,0,23631274,0,32196429,0,43116834,0,56681420,0,73342055,0,93320393,0,117007543,0,144461993,0,175919353,0,211175615,0,250222591,0,292516508,0,337751801,0,385016863,0,433713649,0,482605505,0,530877973,0,577086324,0,620343376,0,659172312,0,692798202,0,719914717,0,740045690,0,752239053,0,756462172]"},
      {16, "[1,1,0,0,1,3,10,18,38,79,153,278,514,891,1523,2528,4072,6367,9772,14572,21306,30498,42785,58863,79666,105852,138459,178275,226114,282612,348514,423785,508764,603037,705993,816528,933532,1054746,1178503,1302160,1423129,1538529,1645908,1741955,1824693,1891546,1940709,1970683,1980976]"},
      {17, "[1,0,0,0,2,0,0,0,50,0,156,0,844,0,2716,0,9280,0,26055,0,70846,0,173224,0,405183,0,883551,0,1847356,0,3669433,0,7024773,0,12919848,0,23019526,0,39697193,0,66608244,0,108748704,0,173371011,0,270001994,0,411791616,0,615371715,0,902700319,0,1300556398,0,1842885348,0,2569619659,0,3529481145,0,4777707107,0,6379225544,0,8404807944,0,10934524315,0,14051849433,0,17847385164,0,22410522390,0,27833575972,0,34200807232,0,41593316021,0,50075498973,0,59701312756,0,70498510402,0,82477120228,0,95612069584,0,109854817368,0,125115124389,0,141276752124,0,158179073390,0,175637520454,0,193425539961,0,211299997259,0,228983624510,0,246195050087,0,262631400199,0,278002047047,0,292010632283,0,304391087240,0,314888097678,0,323293686822,0,329425050810,0,333160013567,0,334411422423]"},
      {18, "[1,1,0,-1,1,2,11,20,60,122,292,573,1199,2264,4307,7692,13639,23121,38688,62619,99808,154969,236962,354532,522744,756614,1080091,1517149,2103843,2875718,3883971,5178127,6826649,8894132,11466985,14623600,18466440,23083747,28588450,35071007,42645944,51394256,61419462,72778864,85549508,99748823,115411657,132499497,150990759,170778600,191774520,213796608,236686776,260188811,284080692,308043009,331804545,355002792,377341521,398442572,418014893,435697784,451237581,464324429,474773647,482354991,486977592,488512665]"},
      {19, "[1,0,0,0,2,0,1,0,76,0,296,0,1763,0,6738,0,25712,0,82893,0,252012,0,694765,0,1807368,0,4392969,0,10154779,0,22296093,0,46930799,0,94802787,0,184822672,0,348299741,0,636837951,0,1131559371,0,1959027689,0,3309329549,0,5465457626,0,8835569146,0,14002953513,0,21778902561,0,33281420196,0,50015102190,0,73986433683,0,107815040622,0,154890725357,0,219515780752,0,307103168571,0,424341546490,0,579425240340,0,782222455286,0,1044516156680,0,1380143077777,0,1805211986577,0,2338168202449,0,2999945060393,0,3813898895206,0,4805843429850,0,6003797685274,0,7437855144286,0,9139694108669,0,11142247265979,0,13478942963820,0,16183166152183,0,19287230767266,0,22821658964018,0,26813925195712,0,31287624164380,0,36261071290807,0,41746472475910,0,47748507080547,0,54263646677747,0,61278874674037,0,68771319597259,0,76707272862777,0,85042295486194,0,93720678352722,0,102676146969267,0,111831862933442,0,121101792448393,0,130391278393710,0,139599058259333,0,148618354053166,0,157339436459345,0,165651094224795,0,173443559767368,0,180610146679903,0,187050288671933,0,192671089114197,0,197390193869982,0,201136986494180,0,203855025614692,0,205502649265697,0,206054755643582]"},
      {20, "[1,1,0,0,2,5,17,40,100,232,544,1199,2599,5365,10770,20867,39312,71826,128004,222286,377375,626606,1019690,1627231,2550571,3929105,5955664,8888409,13072800,18958777,27131530,38333433,53503793,73805811,100673389,135839979,181391167,239789025,313924970,407134237,523239787,666546890,841871660,1054502755,1310204347,1615137665,1975827494,2399034646,2891684840,3460685330,4112816074,4854497808,5691649536,6629418196,7672023583,8822464074,10082371655,11451725459,12928740940,14509620528,16188514360,17957332700,19805806095,21721392176,23689449970,25693256426,27714311797,29732461463,31726325603,33673521588,35551188212,37336279422,39006154571,40538894181,41913908026,43112232559,44117095575,44914144829,45491928155,45842000355,45959277535]"},
  };
  return table;
}
