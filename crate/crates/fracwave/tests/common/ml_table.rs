// (alpha, beta, re z, im z, re E, im E) — reference values computed with
// an independent arbitrary-precision series/integral evaluation.
pub static ML_REFERENCE: [(f64, f64, f64, f64, f64, f64); 394] = [
    (0.3, 0.3, -50.0, 0.0, 9.029779526985106e-05, 0.0),
    (0.3, 0.3, -18.0, 0.0, 0.0006679350360762104, 0.0),
    (0.3, 0.3, -7.0, 0.0, 0.0039764876519630685, 0.0),
    (0.3, 0.3, -2.2, 0.0, 0.02788379171608883, 0.0),
    (0.3, 0.3, -0.6, 0.0, 0.12519859796533273, 0.0),
    (0.3, 0.3, 0.9, 0.0, 5.576631010762943, 0.0),
    (0.3, 0.3, 5.0, 0.0, 9.614982187699846e+94, 0.0),
    (0.3, 0.7, -50.0, 0.0, 0.008973108775831247, 0.0),
    (0.3, 0.7, -18.0, 0.0, 0.024694500401293524, 0.0),
    (0.3, 0.7, -7.0, 0.0, 0.06186407840102387, 0.0),
    (0.3, 0.7, -2.2, 0.0, 0.17572769838296687, 0.0),
    (0.3, 0.7, -0.6, 0.0, 0.4176281909562659, 0.0),
    (0.3, 0.7, 0.9, 0.0, 5.829704763376437, 0.0),
    (0.3, 0.7, 5.0, 0.0, 1.124575138777404e+94, 0.0),
    (0.3, 1.0, -50.0, 0.0, 0.015228201501814696, 0.0),
    (0.3, 1.0, -18.0, 0.0, 0.041427149081404026, 0.0),
    (0.3, 1.0, -7.0, 0.0, 0.10121701506650602, 0.0),
    (0.3, 1.0, -2.2, 0.0, 0.2702979479470905, 0.0),
    (0.3, 1.0, -0.6, 0.0, 0.5879249881838334, 0.0),
    (0.3, 1.0, 0.9, 0.0, 5.621468421677634, 0.0),
    (0.3, 1.0, 5.0, 0.0, 2.2491502775548076e+93, 0.0),
    (0.3, 1.5, -50.0, 0.0, 0.02141349550338835, 0.0),
    (0.3, 1.5, -18.0, 0.0, 0.05773066989333634, 0.0),
    (0.3, 1.5, -7.0, 0.0, 0.13831185241168717, 0.0),
    (0.3, 1.5, -2.2, 0.0, 0.35169856075128575, 0.0),
    (0.3, 1.5, -0.6, 0.0, 0.7114148478885235, 0.0),
    (0.3, 1.5, 0.9, 0.0, 4.70362950176792, 0.0),
    (0.3, 1.5, 5.0, 0.0, 1.538397150031975e+92, 0.0),
    (0.3, 2.0, -50.0, 0.0, 0.021568397368757573, 0.0),
    (0.3, 2.0, -18.0, 0.0, 0.05783528668184909, 0.0),
    (0.3, 2.0, -7.0, 0.0, 0.1369582658247416, 0.0),
    (0.3, 2.0, -2.2, 0.0, 0.33840851671337197, 0.0),
    (0.3, 2.0, -0.6, 0.0, 0.6564295977602683, 0.0),
    (0.3, 2.0, 0.9, 0.0, 3.4689558850218383, 0.0),
    (0.3, 2.0, 5.0, 0.0, 1.0522488491962634e+91, 0.0),
    (0.5, 0.3, -50.0, 0.0, -0.0033405675734057283, 0.0),
    (0.5, 0.3, -18.0, 0.0, -0.008790198977433212, 0.0),
    (0.5, 0.3, -7.0, 0.0, -0.019347261186354627, 0.0),
    (0.5, 0.3, -2.2, 0.0, -0.027276548599045415, 0.0),
    (0.5, 0.3, -0.6, 0.0, 0.06570368179822675, 0.0),
    (0.5, 0.3, 0.9, 0.0, 4.092396129296765, 0.0),
    (0.5, 0.3, 5.0, 0.0, 1370724102304.5913, 0.0),
    (0.5, 0.5, -50.0, 0.0, 0.00011277028156766193, 0.0),
    (0.5, 0.5, -18.0, 0.0, 0.000866662861462509, 0.0),
    (0.5, 0.5, -7.0, 0.0, 0.005589203243685752, 0.0),
    (0.5, 0.5, -2.2, 0.0, 0.045885063454805385, 0.0),
    (0.5, 0.5, -0.6, 0.0, 0.22350675311580412, 0.0),
    (0.5, 0.5, 0.9, 0.0, 4.1995454733746, 0.0),
    (0.5, 0.5, 5.0, 0.0, 720048993373.8694, 0.0),
    (0.5, 0.7, -50.0, 0.0, 0.00444750256191017, 0.0),
    (0.5, 0.7, -18.0, 0.0, 0.01278214287967555, 0.0),
    (0.5, 0.7, -7.0, 0.0, 0.03522447225129444, 0.0),
    (0.5, 0.7, -2.2, 0.0, 0.1253805331335111, 0.0),
    (0.5, 0.7, -0.6, 0.0, 0.3773071779145752, 0.0),
    (0.5, 0.7, 0.9, 0.0, 4.208614666617922, 0.0),
    (0.5, 0.7, 5.0, 0.0, 378245740325.8434, 0.0),
    (0.5, 1.0, -50.0, 0.0, 0.011281536265323773, 0.0),
    (0.5, 1.0, -18.0, 0.0, 0.03129571781590521, 0.0),
    (0.5, 1.0, -7.0, 0.0, 0.07980005432915294, 0.0),
    (0.5, 1.0, -2.2, 0.0, 0.23559296367861401, 0.0),
    (0.5, 1.0, -0.6, 0.0, 0.567804717386587, 0.0),
    (0.5, 1.0, 0.9, 0.0, 4.039284322029826, 0.0),
    (0.5, 1.0, 5.0, 0.0, 144009798674.66104, 0.0),
    (0.5, 1.5, -50.0, 0.0, 0.019774369274693525, 0.0),
    (0.5, 1.5, -18.0, 0.0, 0.053816904565783044, 0.0),
    (0.5, 1.5, -7.0, 0.0, 0.1314571350958353, 0.0),
    (0.5, 1.5, -2.2, 0.0, 0.34745774378244815, 0.0),
    (0.5, 1.5, -0.6, 0.0, 0.7203254710223551, 0.0),
    (0.5, 1.5, 0.9, 0.0, 3.37698258003314, 0.0),
    (0.5, 1.5, 5.0, 0.0, 28801959734.73221, 0.0),
    (0.5, 2.0, -50.0, 0.0, 0.02217209595641638, 0.0),
    (0.5, 2.0, -18.0, 0.0, 0.05969790347387386, 0.0),
    (0.5, 2.0, -7.0, 0.0, 0.14241743314281105, 0.0),
    (0.5, 2.0, -2.2, 0.0, 0.35496428332412017, 0.0),
    (0.5, 2.0, -0.6, 0.0, 0.6800894934552625, 0.0),
    (0.5, 2.0, 0.9, 0.0, 2.4984482365973637, 0.0),
    (0.5, 2.0, 5.0, 0.0, 5760391946.720766, 0.0),
    (0.7, 0.3, -50.0, 0.0, -0.005410530954964088, 0.0),
    (0.7, 0.3, -18.0, 0.0, -0.015175500964359365, 0.0),
    (0.7, 0.3, -7.0, 0.0, -0.03907620105936937, 0.0),
    (0.7, 0.3, -2.2, 0.0, -0.09137425565604242, 0.0),
    (0.7, 0.3, -0.6, 0.0, 0.0022807179386701, 0.0),
    (0.7, 0.3, 0.9, 0.0, 3.2030330414573744, 0.0),
    (0.7, 0.3, 5.0, 0.0, 152099.43328300014, 0.0),
    (0.7, 0.7, -50.0, 0.0, 9.663624446241807e-05, 0.0),
    (0.7, 0.7, -18.0, 0.0, 0.0007881505202392547, 0.0),
    (0.7, 0.7, -7.0, 0.0, 0.005875450927323267, 0.0),
    (0.7, 0.7, -2.2, 0.0, 0.06526678217867317, 0.0),
    (0.7, 0.7, -0.6, 0.0, 0.34016051664702324, 0.0),
    (0.7, 0.7, 0.9, 0.0, 3.3034571703538678, 0.0),
    (0.7, 0.7, 5.0, 0.0, 60633.97993353259, 0.0),
    (0.7, 1.0, -50.0, 0.0, 0.006793665670383094, 0.0),
    (0.7, 1.0, -18.0, 0.0, 0.01941379186269722, 0.0),
    (0.7, 1.0, -7.0, 0.0, 0.05333556480336571, 0.0),
    (0.7, 1.0, -2.2, 0.0, 0.1934759128273786, 0.0),
    (0.7, 1.0, -0.6, 0.0, 0.5533200577092008, 0.0),
    (0.7, 1.0, 0.9, 0.0, 3.1875114321035376, 0.0),
    (0.7, 1.0, 5.0, 0.0, 30419.81980204951, 0.0),
    (0.7, 1.5, -50.0, 0.0, 0.017134482948908094, 0.0),
    (0.7, 1.5, -18.0, 0.0, 0.04734509185048367, 0.0),
    (0.7, 1.5, -7.0, 0.0, 0.11965896543258914, 0.0),
    (0.7, 1.5, -2.2, 0.0, 0.34073095150251526, 0.0),
    (0.7, 1.5, -0.6, 0.0, 0.7346510008323063, 0.0),
    (0.7, 1.5, 0.9, 0.0, 2.6932599827562504, 0.0),
    (0.7, 1.5, 5.0, 0.0, 9635.745265367705, 0.0),
    (0.7, 2.0, -50.0, 0.0, 0.022015528822881946, 0.0),
    (0.7, 2.0, -18.0, 0.0, 0.05981566578736634, 0.0),
    (0.7, 2.0, -7.0, 0.0, 0.14530060663378974, 0.0),
    (0.7, 2.0, -2.2, 0.0, 0.3721986461798397, 0.0),
    (0.7, 2.0, -0.6, 0.0, 0.7066369757305917, 0.0),
    (0.7, 2.0, 0.9, 0.0, 2.0135938613806172, 0.0),
    (0.7, 2.0, 5.0, 0.0, 3052.0628743842394, 0.0),
    (0.9, 0.3, -50.0, 0.0, -0.005586752540865674, 0.0),
    (0.9, 0.3, -18.0, 0.0, -0.01651349131774356, 0.0),
    (0.9, 0.3, -7.0, 0.0, -0.05084957516854646, 0.0),
    (0.9, 0.3, -2.2, 0.0, -0.17595743874462413, 0.0),
    (0.9, 0.3, -0.6, 0.0, -0.06252652944823531, 0.0),
    (0.9, 0.3, 0.9, 0.0, 2.6188992403511824, 0.0),
    (0.9, 0.3, 5.0, 0.0, 1534.9280862720188, 0.0),
    (0.9, 0.7, -50.0, 0.0, -0.003476826913288996, 0.0),
    (0.9, 0.7, -18.0, 0.0, -0.009853917343497656, 0.0),
    (0.9, 0.7, -7.0, 0.0, -0.025831391632203462, 0.0),
    (0.9, 0.7, -2.2, 0.0, -0.011338479419893138, 0.0),
    (0.9, 0.7, -0.6, 0.0, 0.30977603669482595, 0.0),
    (0.9, 0.7, 0.9, 0.0, 2.7282297140581084, 0.0),
    (0.9, 0.7, 5.0, 0.0, 750.6551979591912, 0.0),
    (0.9, 0.9, -50.0, 0.0, 4.053624958092219e-05, 0.0),
    (0.9, 0.9, -18.0, 0.0, 0.0003587876833214346, 0.0),
    (0.9, 0.9, -7.0, 0.0, 0.003751442312425129, 0.0),
    (0.9, 0.9, -2.2, 0.0, 0.09120495331690295, 0.0),
    (0.9, 0.9, -0.6, 0.0, 0.47612746573703746, 0.0),
    (0.9, 0.9, 0.9, 0.0, 2.6954015288408066, 0.0),
    (0.9, 0.9, 5.0, 0.0, 524.9259209272324, 0.0),
    (0.9, 1.0, -50.0, 0.0, 0.002175353076856976, 0.0),
    (0.9, 1.0, -18.0, 0.0, 0.0064588765115408805, 0.0),
    (0.9, 1.0, -7.0, 0.0, 0.020553253921495637, 0.0),
    (0.9, 1.0, -2.2, 0.0, 0.14118303414632016, 0.0),
    (0.9, 1.0, -0.6, 0.0, 0.547464628471651, 0.0),
    (0.9, 1.0, 0.9, 0.0, 2.65668461203549, 0.0),
    (0.9, 1.0, 5.0, 0.0, 438.95181466448264, 0.0),
    (0.9, 1.5, -50.0, 0.0, 0.013524229022622002, 0.0),
    (0.9, 1.5, -18.0, 0.0, 0.03805645497341168, 0.0),
    (0.9, 1.5, -7.0, 0.0, 0.10125369127506537, 0.0),
    (0.9, 1.5, -2.2, 0.0, 0.33274346162412, 0.0),
    (0.9, 1.5, -0.6, 0.0, 0.7557249985086931, 0.0),
    (0.9, 1.5, 0.9, 0.0, 2.2782174666853137, 0.0),
    (0.9, 1.5, 5.0, 0.0, 179.39495951167336, 0.0),
    (0.9, 2.0, -50.0, 0.0, 0.02093366539961178, 0.0),
    (0.9, 2.0, -18.0, 0.0, 0.057679287401387495, 0.0),
    (0.9, 2.0, -7.0, 0.0, 0.1447573121713715, 0.0),
    (0.9, 2.0, -2.2, 0.0, 0.3921325776263793, 0.0),
    (0.9, 2.0, -0.6, 0.0, 0.7362128388378092, 0.0),
    (0.9, 2.0, 0.9, 0.0, 1.7254250358351706, 0.0),
    (0.9, 2.0, 5.0, 0.0, 73.19993580581463, 0.0),
    (1.0, 0.3, -50.0, 0.0, -0.004848227996375718, 0.0),
    (1.0, 0.3, -18.0, 0.0, -0.014464604960939676, 0.0),
    (1.0, 0.3, -7.0, 0.0, -0.05040939316087284, 0.0),
    (1.0, 0.3, -2.2, 0.0, -0.23265475243908523, 0.0),
    (1.0, 0.3, -0.6, 0.0, -0.09340310239690855, 0.0),
    (1.0, 0.3, 0.9, 0.0, 2.3956759990105962, 0.0),
    (1.0, 0.3, 5.0, 0.0, 457.9157713003314, 0.0),
    (1.0, 0.7, -50.0, 0.0, -0.004748407212818812, 0.0),
    (1.0, 0.7, -18.0, 0.0, -0.013914937197799406, 0.0),
    (1.0, 0.7, -7.0, 0.0, -0.04232297912450021, 0.0),
    (1.0, 0.7, -2.2, 0.0, -0.05845780039815444, 0.0),
    (1.0, 0.7, -0.6, 0.0, 0.29875116990826467, 0.0),
    (1.0, 0.7, 0.9, 0.0, 2.5121865787131648, 0.0),
    (1.0, 0.7, 5.0, 0.0, 240.5644457772936, 0.0),
    (1.0, 1.0, -50.0, 0.0, 1.9287498479639178e-22, 0.0),
    (1.0, 1.0, -18.0, 0.0, 1.522997974471263e-08, 0.0),
    (1.0, 1.0, -7.0, 0.0, 0.0009118819655545162, 0.0),
    (1.0, 1.0, -2.2, 0.0, 0.11080315836233387, 0.0),
    (1.0, 1.0, -0.6, 0.0, 0.5488116360940264, 0.0),
    (1.0, 1.0, 0.9, 0.0, 2.45960311115695, 0.0),
    (1.0, 1.0, 5.0, 0.0, 148.4131591025766, 0.0),
    (1.0, 1.5, -50.0, 0.0, 0.011400197031654244, 0.0),
    (1.0, 1.5, -18.0, 0.0, 0.03229986319739783, 0.0),
    (1.0, 1.5, -7.0, 0.0, 0.08852000800974627, 0.0),
    (1.0, 1.5, -2.2, 0.0, 0.3294215214948762, 0.0),
    (1.0, 1.5, -0.6, 0.0, 0.7690109525968708, 0.0),
    (1.0, 1.5, 0.9, 0.0, 2.1267178454440923, 0.0),
    (1.0, 1.5, 5.0, 0.0, 66.2684830243333, 0.0),
    (1.0, 2.0, -50.0, 0.0, 0.02, 0.0),
    (1.0, 2.0, -18.0, 0.0, 0.05555555470944557, 0.0),
    (1.0, 2.0, -7.0, 0.0, 0.1427268740049208, 0.0),
    (1.0, 2.0, -2.2, 0.0, 0.4041803825625755, 0.0),
    (1.0, 2.0, -0.6, 0.0, 0.7519806065099559, 0.0),
    (1.0, 2.0, 0.9, 0.0, 1.621781234618833, 0.0),
    (1.0, 2.0, 5.0, 0.0, 29.48263182051532, 0.0),
    (1.1, 0.3, -50.0, 0.0, -0.003556528269389877, 0.0),
    (1.1, 0.3, -18.0, 0.0, -0.010154104964998847, 0.0),
    (1.1, 0.3, -7.0, 0.0, -0.04181338217460098, 0.0),
    (1.1, 0.3, -2.2, 0.0, -0.3034303544934841, 0.0),
    (1.1, 0.3, -0.6, 0.0, -0.12170042891578084, 0.0),
    (1.1, 0.3, 0.9, 0.0, 2.204483963203747, 0.0),
    (1.1, 0.3, 5.0, 0.0, 190.27437926191462, 0.0),
    (1.1, 0.7, -50.0, 0.0, -0.005550989345449178, 0.0),
    (1.1, 0.7, -18.0, 0.0, -0.016466684848875916, 0.0),
    (1.1, 0.7, -7.0, 0.0, -0.059360820744142145, 0.0),
    (1.1, 0.7, -2.2, 0.0, -0.11208732302214901, 0.0),
    (1.1, 0.7, -0.6, 0.0, 0.2914017067258788, 0.0),
    (1.1, 0.7, 0.9, 0.0, 2.328889800363794, 0.0),
    (1.1, 0.7, 5.0, 0.0, 106.00267318591122, 0.0),
    (1.1, 1.0, -50.0, 0.0, -0.0019600956729167985, 0.0),
    (1.1, 1.0, -18.0, 0.0, -0.005998093924805272, 0.0),
    (1.1, 1.0, -7.0, 0.0, -0.022174543683396126, 0.0),
    (1.1, 1.0, -2.2, 0.0, 0.07839675153368995, 0.0),
    (1.1, 1.0, -0.6, 0.0, 0.5534325175829647, 0.0),
    (1.1, 1.0, 0.9, 0.0, 2.2935278349883585, 0.0),
    (1.1, 1.0, 5.0, 0.0, 68.32845646434188, 0.0),
    (1.1, 1.1, -50.0, 0.0, -4.521739555418595e-05, 0.0),
    (1.1, 1.1, -18.0, 0.0, -0.00043070295088924753, 0.0),
    (1.1, 1.1, -7.0, 0.0, -0.00433791875048573, 0.0),
    (1.1, 1.1, -2.2, 0.0, 0.13866561518648696, 0.0),
    (1.1, 1.1, -0.6, 0.0, 0.6216873537712484, 0.0),
    (1.1, 1.1, 0.9, 0.0, 2.256212462552072, 0.0),
    (1.1, 1.1, 5.0, 0.0, 59.01418082834342, 0.0),
    (1.1, 1.5, -50.0, 0.0, 0.009112671869412227, 0.0),
    (1.1, 1.5, -18.0, 0.0, 0.02582483589260349, 0.0),
    (1.1, 1.5, -7.0, 0.0, 0.07226295443444215, 0.0),
    (1.1, 1.5, -2.2, 0.0, 0.3278196302799421, 0.0),
    (1.1, 1.5, -0.6, 0.0, 0.784075806392589, 0.0),
    (1.1, 1.5, 0.9, 0.0, 2.000390783088582, 0.0),
    (1.1, 1.5, 5.0, 0.0, 32.787504064553104, 0.0),
    (1.1, 2.0, -50.0, 0.0, 0.018786850570237303, 0.0),
    (1.1, 2.0, -18.0, 0.0, 0.052580850697297836, 0.0),
    (1.1, 2.0, -7.0, 0.0, 0.13909416227227875, 0.0),
    (1.1, 2.0, -2.2, 0.0, 0.4184066832206395, 0.0),
    (1.1, 2.0, -0.6, 0.0, 0.7682155127903989, 0.0),
    (1.1, 2.0, 0.9, 0.0, 1.536178176299443, 0.0),
    (1.1, 2.0, 5.0, 0.0, 15.633836714060372, 0.0),
    (1.25, 0.3, -50.0, 0.0, -0.0007643133921817956, 0.0),
    (1.25, 0.3, -18.0, 0.0, -0.00025295432690721956, 0.0),
    (1.25, 0.3, -7.0, 0.0, -0.006771618589753874, 0.0),
    (1.25, 0.3, -2.2, 0.0, -0.4395791735912333, 0.0),
    (1.25, 0.3, -0.6, 0.0, -0.15663532088412632, 0.0),
    (1.25, 0.3, 0.9, 0.0, 1.9632856796167966, 0.0),
    (1.25, 0.3, 5.0, 0.0, 73.86621160987113, 0.0),
    (1.25, 0.7, -50.0, 0.0, -0.005710050504949501, 0.0),
    (1.25, 0.7, -18.0, 0.0, -0.015465760547002348, 0.0),
    (1.25, 0.7, -7.0, 0.0, -0.09152847134799434, 0.0),
    (1.25, 0.7, -2.2, 0.0, -0.20167849276676675, 0.0),
    (1.25, 0.7, -0.6, 0.0, 0.288355850672795, 0.0),
    (1.25, 0.7, 0.9, 0.0, 2.1002066012518044, 0.0),
    (1.25, 0.7, 5.0, 0.0, 44.169766150770045, 0.0),
    (1.25, 1.0, -50.0, 0.0, -0.0042572794085854685, 0.0),
    (1.25, 1.0, -18.0, 0.0, -0.012346867741758007, 0.0),
    (1.25, 1.0, -7.0, 0.0, -0.0702076757368562, 0.0),
    (1.25, 1.0, -2.2, 0.0, 0.030259811812379737, 0.0),
    (1.25, 1.0, -0.6, 0.0, 0.566751349525867, 0.0),
    (1.25, 1.0, 0.9, 0.0, 2.088050068816762, 0.0),
    (1.25, 1.0, 5.0, 0.0, 30.016290519538646, 0.0),
    (1.25, 1.25, -50.0, 0.0, -0.00011103644446061734, 0.0),
    (1.25, 1.25, -18.0, 0.0, -0.0008483306831131597, 0.0),
    (1.25, 1.25, -7.0, 0.0, -0.020806813305503654, 0.0),
    (1.25, 1.25, -2.2, 0.0, 0.2022743327570426, 0.0),
    (1.25, 1.25, -0.6, 0.0, 0.7249653241581723, 0.0),
    (1.25, 1.25, 0.9, 0.0, 1.997687775565553, 0.0),
    (1.25, 1.25, 5.0, 0.0, 21.72825593493246, 0.0),
    (1.25, 1.5, -50.0, 0.0, 0.005511080253278538, 0.0),
    (1.25, 1.5, -18.0, 0.0, 0.015180509009245604, 0.0),
    (1.25, 1.5, -7.0, 0.0, 0.03737173180271349, 0.0),
    (1.25, 1.5, -2.2, 0.0, 0.3317730796032391, 0.0),
    (1.25, 1.5, -0.6, 0.0, 0.8096197476698307, 0.0),
    (1.25, 1.5, 0.9, 0.0, 1.8461450874601955, 0.0),
    (1.25, 1.5, 5.0, 0.0, 15.698868527463631, 0.0),
    (1.25, 2.0, -50.0, 0.0, 0.01643668072994904, 0.0),
    (1.25, 2.0, -18.0, 0.0, 0.04621875848088697, 0.0),
    (1.25, 2.0, -7.0, 0.0, 0.12974548374009248, 0.0),
    (1.25, 2.0, -2.2, 0.0, 0.4451758208091422, 0.0),
    (1.25, 2.0, -0.6, 0.0, 0.7930165675091504, 0.0),
    (1.25, 2.0, 0.9, 0.0, 1.4329207003678854, 0.0),
    (1.25, 2.0, 5.0, 0.0, 8.120461247012125, 0.0),
    (1.5, 0.3, -50.0, 0.0, 0.011913443764986991, 0.0),
    (1.5, 0.3, -18.0, 0.0, 0.08402478843903495, 0.0),
    (1.5, 0.3, -7.0, 0.0, -0.005708228703702484, 0.0),
    (1.5, 0.3, -2.2, 0.0, -0.7188972770492199, 0.0),
    (1.5, 0.3, -0.6, 0.0, -0.18726305331762197, 0.0),
    (1.5, 0.3, 0.9, 0.0, 1.646729675080055, 0.0),
    (1.5, 0.3, 5.0, 0.0, 26.291412780260078, 0.0),
    (1.5, 0.7, -50.0, 0.0, 4.6128538352698225e-05, 0.0),
    (1.5, 0.7, -18.0, 0.0, 0.06596516908778904, 0.0),
    (1.5, 0.7, -7.0, 0.0, -0.26256397213570554, 0.0),
    (1.5, 0.7, -2.2, 0.0, -0.34227995872814254, 0.0),
    (1.5, 0.7, -0.6, 0.0, 0.30581165141834993, 0.0),
    (1.5, 0.7, 0.9, 0.0, 1.805485831642777, 0.0),
    (1.5, 0.7, 5.0, 0.0, 17.164234943338954, 0.0),
    (1.5, 1.0, -50.0, 0.0, -0.004578385105839278, 0.0),
    (1.5, 1.0, -18.0, 0.0, 0.025422983865700414, 0.0),
    (1.5, 1.0, -7.0, 0.0, -0.2494119804959449, 0.0),
    (1.5, 1.0, -2.2, 0.0, -0.022561708436504693, 0.0),
    (1.5, 1.0, -0.6, 0.0, 0.6046962749356336, 0.0),
    (1.5, 1.0, 0.9, 0.0, 1.8269097531916447, 0.0),
    (1.5, 1.0, 5.0, 0.0, 12.457289126443952, 0.0),
    (1.5, 1.5, -50.0, 0.0, -0.0002833110656227309, 0.0),
    (1.5, 1.5, -18.0, 0.0, 0.0018748810791213845, 0.0),
    (1.5, 1.5, -7.0, 0.0, -0.06494421720286599, 0.0),
    (1.5, 1.5, -2.2, 0.0, 0.36708366859021935, 0.0),
    (1.5, 1.5, -0.6, 0.0, 0.8575963659424046, 0.0),
    (1.5, 1.5, 0.9, 0.0, 1.6544570281124533, 0.0),
    (1.5, 1.5, 5.0, 0.0, 7.246842437562148, 0.0),
    (1.5, 2.0, -50.0, 0.0, 0.011167669745851065, 0.0),
    (1.5, 2.0, -18.0, 0.0, 0.02645058032014792, 0.0),
    (1.5, 2.0, -7.0, 0.0, 0.10663222591262393, 0.0),
    (1.5, 2.0, -2.2, 0.0, 0.5069426925924697, 0.0),
    (1.5, 2.0, -0.6, 0.0, 0.8337341094875655, 0.0),
    (1.5, 2.0, 0.9, 0.0, 1.3072285373285855, 0.0),
    (1.5, 2.0, 5.0, 0.0, 4.135522824396726, 0.0),
    (1.75, 0.3, -50.0, 0.0, -0.39043679153037825, 0.0),
    (1.75, 0.3, -18.0, 0.0, 1.1544716891920184, 0.0),
    (1.75, 0.3, -7.0, 0.0, -0.5588212280958612, 0.0),
    (1.75, 0.3, -2.2, 0.0, -0.9572383283778747, 0.0),
    (1.75, 0.3, -0.6, 0.0, -0.17972360184403507, 0.0),
    (1.75, 0.3, 0.9, 0.0, 1.400674404480876, 0.0),
    (1.75, 0.3, 5.0, 0.0, 13.322875724275958, 0.0),
    (1.75, 0.7, -50.0, 0.0, -0.2703895282795844, 0.0),
    (1.75, 0.7, -18.0, 0.0, 0.46839513030867547, 0.0),
    (1.75, 0.7, -7.0, 0.0, -0.7474616041081916, 0.0),
    (1.75, 0.7, -2.2, 0.0, -0.40737496270422086, 0.0),
    (1.75, 0.7, -0.6, 0.0, 0.34766729207689906, 0.0),
    (1.75, 0.7, 0.9, 0.0, 1.5824866462346339, 0.0),
    (1.75, 0.7, 5.0, 0.0, 9.278785184608386, 0.0),
    (1.75, 1.0, -50.0, 0.0, -0.13970738964219356, 0.0),
    (1.75, 1.0, -18.0, 0.0, 0.12107922969122249, 0.0),
    (1.75, 1.0, -7.0, 0.0, -0.5907205771688859, 0.0),
    (1.75, 1.0, -2.2, 0.0, -0.004941597799376631, 0.0),
    (1.75, 1.0, -0.6, 0.0, 0.6567557824492404, 0.0),
    (1.75, 1.0, 0.9, 0.0, 1.6332901054394977, 0.0),
    (1.75, 1.0, 5.0, 0.0, 7.074718112010602, 0.0),
    (1.75, 1.5, -50.0, 0.0, -0.020697434401850776, 0.0),
    (1.75, 1.5, -18.0, 0.0, -0.08968827475917909, 0.0),
    (1.75, 1.5, -7.0, 0.0, -0.1855109107980531, 0.0),
    (1.75, 1.5, -2.2, 0.0, 0.445135608969845, 0.0),
    (1.75, 1.5, -0.6, 0.0, 0.907548772249099, 0.0),
    (1.75, 1.5, 0.9, 0.0, 1.5168301353975444, 0.0),
    (1.75, 1.5, 5.0, 0.0, 4.457172021482241, 0.0),
    (1.75, 1.75, -50.0, 0.0, 0.002123260436567314, 0.0),
    (1.75, 1.75, -18.0, 0.0, -0.08655148899394456, 0.0),
    (1.75, 1.75, -7.0, 0.0, -0.01508731620612895, 0.0),
    (1.75, 1.75, -2.2, 0.0, 0.5496930983093237, 0.0),
    (1.75, 1.75, -0.6, 0.0, 0.917453886240873, 0.0),
    (1.75, 1.75, 0.9, 0.0, 1.3829207414016524, 0.0),
    (1.75, 1.75, 5.0, 0.0, 3.5055309946677555, 0.0),
    (1.75, 2.0, -50.0, 0.0, 0.013114250963098534, 0.0),
    (1.75, 2.0, -18.0, 0.0, -0.05363283648137552, 0.0),
    (1.75, 2.0, -7.0, 0.0, 0.10865524851418042, 0.0),
    (1.75, 2.0, -2.2, 0.0, 0.5864064327347366, 0.0),
    (1.75, 2.0, -0.6, 0.0, 0.8710390759552085, 0.0),
    (1.75, 2.0, 0.9, 0.0, 1.2196047761607245, 0.0),
    (1.75, 2.0, 5.0, 0.0, 2.733435341988211, 0.0),
    (2.0, 0.3, -50.0, 0.0, -1.2175762812387323, 0.0),
    (2.0, 0.3, -18.0, 0.0, 1.6357545963406543, 0.0),
    (2.0, 0.3, -7.0, 0.0, -1.5951204984761973, 0.0),
    (2.0, 0.3, -2.2, 0.0, -1.0551140629860547, 0.0),
    (2.0, 0.3, -0.6, 0.0, -0.14039604065720848, 0.0),
    (2.0, 0.3, 0.9, 0.0, 1.2008253795643276, 0.0),
    (2.0, 0.3, 5.0, 0.0, 8.134253690896978, 0.0),
    (2.0, 0.7, -50.0, 0.0, 0.5567724390172744, 0.0),
    (2.0, 0.7, -18.0, 0.0, 0.015197971403845786, 0.0),
    (2.0, 0.7, -7.0, 0.0, -1.311890655527762, 0.0),
    (2.0, 0.7, -2.2, 0.0, -0.3648951080624074, 0.0),
    (2.0, 0.7, -0.6, 0.0, 0.4047672733399205, 0.0),
    (2.0, 0.7, 0.9, 0.0, 1.4073107517332977, 0.0),
    (2.0, 0.7, 5.0, 0.0, 5.96083680944518, 0.0),
    (2.0, 1.0, -50.0, 0.0, 0.7053479063084424, 0.0),
    (2.0, 1.0, -18.0, 0.0, -0.4526618572923525, 0.0),
    (2.0, 1.0, -7.0, 0.0, -0.8795687341082288, 0.0),
    (2.0, 1.0, -2.2, 0.0, 0.08744480167834724, 0.0),
    (2.0, 1.0, -0.6, 0.0, 0.7147031929542251, 0.0),
    (2.0, 1.0, 0.9, 0.0, 1.4847789361596264, 0.0),
    (2.0, 1.0, 5.0, 0.0, 4.731673471130766, 0.0),
    (2.0, 1.5, -50.0, 0.0, 0.3707549462370278, 0.0),
    (2.0, 1.5, -18.0, 0.0, -0.4751302701618352, 0.0),
    (2.0, 1.5, -7.0, 0.0, -0.2063103635184212, 0.0),
    (2.0, 1.5, -2.2, 0.0, 0.5533659163506457, 0.0),
    (2.0, 1.5, -0.6, 0.0, 0.9546018893473017, 0.0),
    (2.0, 1.5, 0.9, 0.0, 1.415060209615854, 0.0),
    (2.0, 1.5, 5.0, 0.0, 3.1828168630309417, 0.0),
    (2.0, 2.0, -50.0, 0.0, 0.10024812527586707, 0.0),
    (2.0, 2.0, -18.0, 0.0, -0.2101715229352548, 0.0),
    (2.0, 2.0, -7.0, 0.0, 0.17982485208003604, 0.0),
    (2.0, 2.0, -2.2, 0.0, 0.671617249852729, 0.0),
    (2.0, 2.0, -0.6, 0.0, 0.9029574980594192, 0.0),
    (2.0, 2.0, 0.9, 0.0, 1.156896465771588, 0.0),
    (2.0, 2.0, 5.0, 0.0, 2.068271444341998, 0.0),
    (0.6, 1.0, -3.0, 0.4, 0.15711149163286392, 0.020824660786443593),
    (0.6, 1.0, -1.2, -0.3, 0.35143050497032186, -0.06708698376547419),
    (0.6, 1.0, 2.0, 0.1, 38.13624727561289, 10.387424159646322),
    (1.4, 0.8, -3.0, 0.4, -0.3015645127113551, 0.027092699480940684),
    (1.4, 0.8, -1.2, -0.3, 0.07963683250770749, -0.12413293615514505),
    (1.4, 0.8, 2.0, 0.1, 4.154181172234399, 0.26428355069107873),
    (1.9, 1.9, -3.0, 0.4, 0.5118995968900821, 0.056500685785684415),
    (1.9, 1.9, -1.2, -0.3, 0.8021254050224611, -0.05452353933570001),
    (1.9, 1.9, 2.0, 0.1, 1.5244532421417263, 0.02737279254374074),
];
