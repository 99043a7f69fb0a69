// Stub service payloads. The fixed-volume, height-range, score and
// contour entries are captured verbatim from a running service; the
// fixed-r entry carries the two-decimal reference design that the
// comparison tests pin the tray text against.

import { CompactnessReport, ContourResponse, OptimalDesign } from "../src/types.js";

// optimize fixed-volume {volume: 400, alpha_deg: 30}
export const OPTIMIZE_FIXED_VOLUME: OptimalDesign = {"w_min":8.848579141499343,"l_min":8.848579141499343,"h_min":5.108729549290353,"s_min":271.22998637647174,"r_min":1.0,"k_min":0.5773502691896257,"v":400.0};

// optimize fixed-r {volume: 400, alpha_deg: 30, r: 1.5}
export const OPTIMIZE_FIXED_R: OptimalDesign = {"w_min":7.27,"l_min":10.91,"h_min":5.04,"s_min":274.94,"r_min":1.5,"k_min":0.69,"v":400.0};

// optimize height-range {volume: 400, alpha_deg: 30, hmin: 3, hmax: 4}
export const OPTIMIZE_HEIGHT_RANGE: OptimalDesign = {"w_min":10.0,"l_min":10.0,"h_min":4.0,"s_min":275.47005383792515,"r_min":1.0,"k_min":0.4,"v":400.0,"kkt":{"h_crit":5.108729549290353,"active":"upper","mu1":0.0,"mu2":8.867513459481287}};

// score {width: 12.5, length: 12.5, height: 7.9, alpha_deg: 35}
export const SCORE_SQUARE_HOUSE: CompactnessReport = {"surface":585.7460294939775,"min_surface":585.6675433796587,"ratio":1.0001340113776254,"surplus":0.07848611431882091};

// contour volume=400 alpha_deg=30 nr=21 nk=30 rlo=0.5 rhi=1.5
export const CONTOUR_400_30: ContourResponse = {"r_axis":[0.5,0.55,0.6,0.65,0.7,0.75,0.8,0.8500000000000001,0.9,0.95,1.0,1.05,1.1,1.15,1.2000000000000002,1.25,1.3,1.35,1.4,1.4500000000000002,1.5],"k_axis":[0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.7999999999999999,0.8999999999999999,0.9999999999999999,1.0999999999999999,1.2,1.3,1.4,1.5,1.5999999999999999,1.7,1.8,1.9,2.0,2.0999999999999996,2.1999999999999997,2.3,2.4,2.5,2.6,2.6999999999999997,2.8,2.9,3.0],"surface":[[350.9401076758502,354.76100312112294,358.76073176917555,362.8647442108391,367.0227848279678,371.20042640499,375.3738270992532,379.52637944433764,383.6465104558158,387.7262037797838,391.7599869173821,395.74422503916185,399.67662108316415,403.55585718245857,407.38133449286136,411.1529825242428,414.871118201366,418.5363409197124,422.1494539268511,425.7114051376527,429.2232424160688],[296.6736774502809,296.7914911250491,297.4112802579344,298.40165338404927,299.66933959509845,301.1465954264788,302.78326014650077,304.54157847272444,306.392731412009,308.3144547401552,310.28936909060286,312.30378688106896,314.34684559990797,316.4098687233638,318.4858881197052,320.56928278503733,322.65550255486494,324.7408546780301,326.82233743581116,328.897509344909,330.9643855398055],[284.0943721243028,282.4372945082243,281.46040079728243,280.99898970098167,280.9348635510255,281.18117734800734,281.6728334490584,282.36019054522694,283.2048263312469,284.17661310205506,285.2516558827909,286.41081095667704,287.63860334020035,288.9224237439399,290.25192470263534,291.61856084678556,293.015234964051,294.43602270201364,295.87595641928925,297.3308540049991,298.79718222692725],[282.1367687027573,279.326775871323,277.3235172020975,275.93784829176724,275.0333860798325,274.5094283398311,274.29010051221593,274.3172309391835,274.54554062041916,274.93931539313985,275.47005383792504,276.11477301125916,276.85476723181137,277.6746848888777,278.5618323416315,279.50564250643316,280.4972645678892,281.5292439231169,282.5952701411934,283.68997674728485,284.8087808904504],[284.1775194509296,280.5131722786331,277.7554016424933,275.69537311485203,274.1821072773643,273.1038187133708,272.37604307034,271.9338324861203,271.72647924957425,271.7138605022055,271.86385106186066,272.1504571595141,272.55244723320715,273.0523320282441,273.6355944144936,274.29010051221593,275.00564432384607,275.7735919432334,276.5866009154219,277.4383969292124,278.3235946881701],[287.99547536796655,283.649984706542,280.29447619610573,277.70342787475363,275.71352020922626,274.2036204965778,273.08203724943564,272.27813474749087,271.7366590288363,271.41380360166903,271.274422286315,271.29001684895877,271.4372592274038,271.69688971597736,272.0528841210858,272.4918163513539,273.00236502512536,273.57492757853413,274.20131556722,274.87451196036335,275.5884762421198],[292.6621038363933,287.74795526730003,283.8959896683584,280.8660853549433,278.48414593079,276.6208899853031,275.17833664324013,274.08090891262765,273.26941007824206,272.6968444087612,272.3254545629819,272.1245811872624,272.0690900971496,272.1381988248753,272.3145890314026,272.5837267371905,272.93333577762866,273.3529856932618,273.8337660980309,274.3680271109159,274.94917076297406],[297.73502691896255,292.330964465764,288.0531158563812,284.64830604279854,281.9328163608294,279.770099551625,278.05657428222383,276.71226939589627,275.6744865942344,274.89340146549154,274.32894371462777,273.94854214141463,273.7254668045672,273.6375915393405,273.6664574776388,273.7965554765398,274.014770011062,274.30994370310634,274.67253305127014,275.09433386022215,275.5682604732148],[302.9850345518285,297.1492143103934,292.49739131146697,288.764534741131,285.7581958504105,283.33524225326346,281.3870222301531,279.8295905464869,278.59708539048154,277.6371294319199,276.90756706661836,276.3741051881608,276.00857810592424,275.7876519214708,275.6918436803996,275.70476951718183,275.8125617531972,276.00341226452525,276.2672113388719,276.59525953195055,276.98003589194997],[308.286700733481,302.06383036813435,297.0777911647132,293.0526553496039,289.7879570630111,287.13452180391323,284.9790495662356,283.2339549866948,281.83048104344505,280.7139159871017,279.8401989929577,279.1734650774885,278.6842389961272,278.34808619099726,278.1445911908682,278.05657428222383,278.06948402078814,278.1709211916439,278.3502621989861,278.5983584863822,278.9072946801458],[313.56908373968366,306.994617786962,301.7057871875812,297.41655477993913,293.9190223358008,291.0584179190878,288.7171383929131,286.80423094699825,285.2482621211613,283.99236366403187,282.9907159736602,282.2060040283789,281.60754538105283,281.1698915477144,280.8717686224814,280.69526477811604,280.6251999995464,280.64863207117423,280.7544656487871,280.9331401724573,281.17637868546916],[318.79148995169055,311.894250592493,306.32809793659806,301.7975456843775,298.08775281060923,295.03872177359364,292.5288345541604,290.4639983389974,288.77028548745875,287.3888192931824,286.27214309289224,285.3815929776599,284.68536417511734,284.1570661220226,283.77462777877116,283.51945788691836,283.3757934370372,283.33018888223637,283.3711118519723,283.4886203325934,283.67410279277084],[323.9307383698904,316.734634237668,310.9122288847773,306.15914965166166,302.2540295452726,299.03196165166673,296.36755795393174,294.16377865786137,292.34435645544534,290.84853156655754,289.6273132439189,288.6407741847029,287.85605896007877,287.24589553526533,286.7874673995675,286.4615482212752,286.25183033615673,286.144398206365,286.1273115914377,286.19027265444265,286.324357929247],[328.9741084155093,321.49930745565143,315.4383776139504,310.47854621847875,306.39228017778316,303.01003596435424,300.20286658310596,297.87095143376683,295.9358164413502,294.33492649822443,293.0178451880719,291.9434551534501,291.077911736132,290.3931133323558,289.86554216553435,289.47537475427833,289.20579153105234,289.0424354251111,288.9729831931732,288.9868030177944,289.07467877725384],[333.91526771948037,326.1790243153472,319.8947020335596,314.7415533921406,310.4861935583634,306.9546804540157,304.014692130299,301.5637719789206,299.5213548685033,297.8232240991819,296.41757444290107,295.2621621904637,294.3222067692294,293.56882202067237,292.9778272121092,292.52883455416037,292.2045409180101,291.99017230892065,291.87304396916045,291.84220896247666,291.88817514803384],[338.75183984049346,330.76909456921766,324.2744547618268,318.9395735722635,314.52549178898084,310.85407867349636,307.7897994509695,305.22768898117425,303.08519287154127,301.29649523411905,299.80848954819857,298.57786167695485,297.5689419059677,296.75209898565413,296.1025227907086,295.59928997752303,295.22463865392444,294.96339941884816,294.80254477717693,294.73082914521586,294.7384988820343],[343.48391131496135,335.26773630397275,328.57419618727744,323.0676791156251,318.50389834355826,314.7007211450507,311.51954401797434,308.8530065170921,306.6166553471662,304.7431485316994,303.17813811484433,301.87728907952805,300.8040839833779,299.9281814067097,299.22417151355097,298.67062081931357,298.249330572458,297.94475496097476,297.74354031875407,297.63415693843893,297.6066024739809],[348.1130950700209,339.6750315780618,332.7926528519364,327.123382041643,322.41782621412864,318.49001794597496,315.1984140683428,312.4333601822931,310.10858492454423,308.1552855873201,306.51792626698943,305.15119531574686,304.01776452827056,303.086613467155,302.3317590499972,301.7312802971981,301.2665611061722,300.92169616275515,300.68302036865157,300.5387328075875,300.4785937999399],[352.64193279812076,343.99225174340677,336.9299733672364,331.1058267666836,326.2655126221657,322.2193797383491,318.8230616532768,315.9647013542638,313.55628222171055,311.52759965648306,309.82197793600716,308.3931685778599,307.20306584164007,306.21999826101853,305.4174332720297,304.7729827260464,304.26763067059454,303.88512745103435,303.6115097463908,303.4347170006133,303.3442823823675],[357.0735088240713,348.22141505601064,340.9872354384712,335.01525115118926,330.0464379031061,325.8875976973044,322.3916463409052,319.444607021965,316.9567838487569,314.8566236280847,313.08635439313457,311.59882684050893,310.35518775048143,309.3231399329825,308.475622818913,307.7897994509695,307.24626982836264,306.82845363913117,306.5221012556652,306.3149029138251,306.19617380733615],[361.4111986115898,352.3649933403227,344.9661149664114,338.8526215123637,333.76092930182983,329.49441850020605,325.90338345015203,322.87180302929255,320.3083621949148,318.14020770030015,316.3085110030207,314.7652547500414,313.4708655805287,312.3924435881326,311.50241971678105,310.7775248797458,310.197989376723,309.74691465845046,309.4097756022852,309.1740226969612,309.02876148070993],[365.65850443926104,356.4257160255286,348.8686617247765,342.6193826028309,337.40988744893485,333.0402491424842,329.3582287714374,326.24583004627164,323.6101738187061,321.37715121336646,319.4869134030604,317.89060495420216,316.54795735563107,315.4254890084253,314.4951401979062,313.7332249372917,313.1196169232462,312.6371107009262,312.2709155131521,312.0082507269497,311.83801980692374],[369.8189483014362,360.4064387647136,352.6971462485591,346.31728483396176,340.9945956230373,336.52594966639606,332.75665597380475,329.56680669537366,326.86200919642556,324.56693981061943,322.6207627743256,320.97381210257015,319.5851470817456,318.42072371852584,317.45200799885674,316.65491100533046,316.0089618403146,315.49665853026147,315.10295371860263,314.81484355133483,314.6210363618257],[373.89600279563143,364.31005543703833,356.45395495958036,349.94826414975563,344.5165857119287,339.95268633006293,336.09949793231556,332.83525985284535,330.06411270435245,327.7095557198818,325.70979696719724,324.01438530037314,322.5817289613544,321.3772393494433,320.37192322443707,319.54130160533475,318.86457005763174,318.3239396499854,317.9041147403871,317.5918755214722,317.375741579454],[377.89304743790285,368.1394395964561,360.141518348367,353.51435823483166,347.9775435110548,343.3218268864267,339.38783274169583,336.0520020436611,333.2170519550453,330.8053395205217,328.7541451303203,327.01225598184055,325.5374488527539,324.2946069904904,323.2542918692462,322.3916463409052,321.6855426543243,321.1179137546871,320.67322339432843,320.33804252379014,320.10070787567275],[381.81334209454906,371.89740607079995,363.7622620281858,357.01764806303424,351.37924162175494,346.63486554547353,342.6229013474111,339.2180422596109,336.3216222508784,333.8548886240358,331.7542205629447,329.9676654399191,328.4523867498483,327.172754863909,326.09889890796757,325.205594603936,324.471400363299,323.8779791992603,323.4095613774345,323.0525148256525,322.7949988829434],[385.66001196398327,375.58668643076385,367.3185737372907,360.4602172769064,354.7234919015058,349.8933690741935,345.80604778516613,342.3345207576317,339.37877630380757,336.8589822316702,334.71064118874637,332.8810810629056,331.326869001506,330.01187672420167,328.9058130525408,327.98309685078607,327.22198151308714,326.60386774045276,326.11275893209404,325.7348257753604,325.4580552906196],[389.4360403440889,379.20991403849314,370.8127815262032,363.84412420481584,358.0121118784142,353.0989380818139,348.9386757370868,345.40266122927176,342.38957231395824,339.818525580122,337.62417019543557,335.75313356877444,334.161402319569,332.8123628002449,331.67531477295177,330.72432983266907,329.93736458692314,329.2955645333996,328.78271237978043,328.38478696475977,328.08960772112675],[393.1442666181021,382.7696157170885,374.2471398192863,367.1713828851991,361.24690120630555,356.2531792959571,352.0222169586245,348.42373566014567,345.35513550500656,342.734508364942,340.4956715325173,338.5845697421847,336.95662390196355,335.57474743607753,334.4078415742044,333.42963961606813,332.61780908411384,331.9532469229653,331.41952092393234,331.002423118665,330.6896097751186],[396.7873876977592,386.2682079843035,377.62382102867844,370.4439505353268,364.4296253774427,359.3576858434207,355.058108401029,351.399038527851,348.2766295992804,345.6079736685275,343.3260764464504,341.3762167132407,339.7132635765153,338.299669208518,337.1039461856393,336.09949793231556,335.2637101103529,334.57723734821604,334.02343793583185,333.587921823951,333.2581862607769]],"min":{"r":1.0,"k":0.6,"s":271.274422286315}};
