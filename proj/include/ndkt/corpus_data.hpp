#pragma once

// Transcriptions of the published tour figures in ndkt v1 format, with the
// FNV-1a digest of each text taken when it was transcribed.

#include <cstdint>
#include <string_view>

namespace ndkt::corpus_data {

inline constexpr std::string_view fig1b = R"ndkt(ndkt v1
shape: 6 6
1 10 35 28 25 12
34 29 2 11 8 27
3 36 9 26 13 24
30 33 20 5 16 7
21 4 31 18 23 14
32 19 22 15 6 17
)ndkt";
inline constexpr std::uint64_t fig1b_digest = 0xd16d8bb36c3dd5c5ULL;

inline constexpr std::string_view fig2 = R"ndkt(ndkt v1
shape: 4 4 4
19 46 63 2
48 1 20 61
29 52 33 16
34 31 14 51

58 7 22 43
21 60 41 8
40 9 28 53
11 54 39 26

47 18 3 62
4 45 64 17
49 32 13 36
30 35 50 15

6 59 42 23
57 24 5 44
12 37 56 25
55 10 27 38
)ndkt";
inline constexpr std::uint64_t fig2_digest = 0x2adf260e3ce113f2ULL;

inline constexpr std::string_view fig3 = R"ndkt(ndkt v1
shape: 4 4 4
19 46 63 2
48 17 4 61
29 52 33 16
34 15 30 51

58 7 22 43
5 60 41 24
40 9 28 53
27 54 39 10

47 18 3 62
20 45 64 1
49 32 13 36
14 35 50 31

6 59 42 23
57 8 21 44
12 37 56 25
55 26 11 38
)ndkt";
inline constexpr std::uint64_t fig3_digest = 0xf0cb239cd539002aULL;

inline constexpr std::string_view fig6 = R"ndkt(ndkt v1
shape: 4 3 2 2
1 22 9 18
8 17 2 23
3 24 7 16

10 13 6 21
5 20 11 14
12 15 4 19


46 31 42 27
41 26 47 32
48 33 40 25

43 28 39 36
38 35 44 29
45 30 37 34
)ndkt";
inline constexpr std::uint64_t fig6_digest = 0x22523ab258e11819ULL;

inline constexpr std::string_view fig7 = R"ndkt(ndkt v1
shape: 4 3 2 2
1 22 25 28
26 29 2 23
3 24 27 30

36 33 6 21
5 20 35 32
34 31 4 19


10 13 46 43
47 44 11 14
12 15 48 45

39 42 9 18
8 17 38 41
37 40 7 16
)ndkt";
inline constexpr std::uint64_t fig7_digest = 0x878b14dacab13893ULL;

inline constexpr std::string_view fig8 = R"ndkt(ndkt v1
shape: 4 3 2 2 2
1 22 25 28
26 29 2 23
3 24 27 30

36 33 6 21
5 20 35 32
34 31 4 19


10 13 46 43
47 44 11 14
12 15 48 45

39 42 9 18
8 17 38 41
37 40 7 16



60 63 96 93
95 92 59 62
58 61 94 91

85 88 55 64
56 65 86 89
87 90 57 66


51 72 75 78
74 77 50 71
49 70 73 76

82 79 52 67
53 68 83 80
84 81 54 69
)ndkt";
inline constexpr std::uint64_t fig8_digest = 0x98c6d52149239516ULL;

inline constexpr std::string_view fig9 = R"ndkt(ndkt v1
shape: 4 4 4 4
1 80 191 242
192 241 2 79
113 64 207 130
208 129 114 63

112 33 210 159
209 160 111 34
32 81 162 239
161 240 31 82

177 256 15 66
16 65 178 255
193 144 127 50
128 49 194 143

224 145 98 47
97 48 223 146
176 225 18 95
17 96 175 226


120 57 202 135
201 136 119 58
8 245 186 75
185 76 7 246

25 88 167 234
168 233 26 87
105 156 215 38
216 37 106 155

200 137 122 55
121 56 199 138
184 69 10 251
9 252 183 70

169 232 23 90
24 89 170 231
217 44 103 150
104 149 218 43


189 244 3 78
4 77 190 243
205 132 115 62
116 61 206 131

212 157 110 35
109 36 211 158
164 237 30 83
29 84 163 238

13 68 179 254
180 253 14 67
125 52 195 142
196 141 126 51

100 45 222 147
221 148 99 46
20 93 174 227
173 228 19 94


204 133 118 59
117 60 203 134
188 73 6 247
5 248 187 74

165 236 27 86
28 85 166 235
213 40 107 154
108 153 214 39

124 53 198 139
197 140 123 54
12 249 182 71
181 72 11 250

21 92 171 230
172 229 22 91
101 152 219 42
220 41 102 151
)ndkt";
inline constexpr std::uint64_t fig9_digest = 0xcc7ba68dafe7ebedULL;

inline constexpr std::string_view fig10 = R"ndkt(ndkt v1
shape: 4 4 4 4 4
1 320 767 962
768 961 2 319
449 256 831 514
832 513 450 255

448 129 834 639
833 640 447 130
128 321 642 959
641 960 127 322

705 1024 63 258
64 257 706 1023
769 576 511 194
512 193 770 575

896 577 386 191
385 192 895 578
704 897 66 383
65 384 703 898


480 225 802 543
801 544 479 226
32 289 738 991
737 992 31 290

97 352 671 930
672 929 98 351
417 160 863 610
864 609 418 159

800 545 482 223
481 224 799 546
736 993 34 287
33 288 735 994

673 928 95 354
96 353 674 927
865 608 415 162
416 161 866 607


753 976 15 306
16 305 754 975
817 528 463 242
464 241 818 527

848 625 434 143
433 144 847 626
656 945 114 335
113 336 655 946

49 272 719 1010
720 1009 50 271
497 208 783 562
784 561 498 207

400 177 882 591
881 592 399 178
80 369 690 911
689 912 79 370


816 529 466 239
465 240 815 530
752 977 18 303
17 304 751 978

657 944 111 338
112 337 658 943
849 624 431 146
432 145 850 623

496 209 786 559
785 560 495 210
48 273 722 1007
721 1008 47 274

81 368 687 914
688 913 82 367
401 176 879 594
880 593 402 175



456 249 826 519
825 520 455 250
8 313 762 967
761 968 7 314

121 328 647 954
648 953 122 327
441 136 839 634
840 633 442 135

776 569 506 199
505 200 775 570
712 1017 58 263
57 264 711 1018

697 904 71 378
72 377 698 903
889 584 391 186
392 185 890 583


25 296 743 986
744 985 26 295
473 232 807 538
808 537 474 231

424 153 858 615
857 616 423 154
104 345 666 935
665 936 103 346

729 1000 39 282
40 281 730 999
793 552 487 218
488 217 794 551

872 601 410 167
409 168 871 602
680 921 90 359
89 360 679 922


824 521 458 247
457 248 823 522
760 969 10 311
9 312 759 970

649 952 119 330
120 329 650 951
841 632 439 138
440 137 842 631

504 201 778 567
777 568 503 202
56 265 714 1015
713 1016 55 266

73 376 695 906
696 905 74 375
393 184 887 586
888 585 394 183


745 984 23 298
24 297 746 983
809 536 471 234
472 233 810 535

856 617 426 151
425 152 855 618
664 937 106 343
105 344 663 938

41 280 727 1002
728 1001 42 279
489 216 791 554
792 553 490 215

408 169 874 599
873 600 407 170
88 361 682 919
681 920 87 362



765 964 3 318
4 317 766 963
829 516 451 254
452 253 830 515

836 637 446 131
445 132 835 638
644 957 126 323
125 324 643 958

61 260 707 1022
708 1021 62 259
509 196 771 574
772 573 510 195

388 189 894 579
893 580 387 190
68 381 702 899
701 900 67 382


804 541 478 227
477 228 803 542
740 989 30 291
29 292 739 990

669 932 99 350
100 349 670 931
861 612 419 158
420 157 862 611

484 221 798 547
797 548 483 222
36 285 734 995
733 996 35 286

93 356 675 926
676 925 94 355
413 164 867 606
868 605 414 163


13 308 755 974
756 973 14 307
461 244 819 526
820 525 462 243

436 141 846 627
845 628 435 142
116 333 654 947
653 948 115 334

717 1012 51 270
52 269 718 1011
781 564 499 206
500 205 782 563

884 589 398 179
397 180 883 590
692 909 78 371
77 372 691 910


468 237 814 531
813 532 467 238
20 301 750 979
749 980 19 302

109 340 659 942
660 941 110 339
429 148 851 622
852 621 430 147

788 557 494 211
493 212 787 558
724 1005 46 275
45 276 723 1006

685 916 83 366
84 365 686 915
877 596 403 174
404 173 878 595



828 517 454 251
453 252 827 518
764 965 6 315
5 316 763 966

645 956 123 326
124 325 646 955
837 636 443 134
444 133 838 635

508 197 774 571
773 572 507 198
60 261 710 1019
709 1020 59 262

69 380 699 902
700 901 70 379
389 188 891 582
892 581 390 187


741 988 27 294
28 293 742 987
805 540 475 230
476 229 806 539

860 613 422 155
421 156 859 614
668 933 102 347
101 348 667 934

37 284 731 998
732 997 38 283
485 220 795 550
796 549 486 219

412 165 870 603
869 604 411 166
92 357 678 923
677 924 91 358


460 245 822 523
821 524 459 246
12 309 758 971
757 972 11 310

117 332 651 950
652 949 118 331
437 140 843 630
844 629 438 139

780 565 502 203
501 204 779 566
716 1013 54 267
53 268 715 1014

693 908 75 374
76 373 694 907
885 588 395 182
396 181 886 587


21 300 747 982
748 981 22 299
469 236 811 534
812 533 470 235

428 149 854 619
853 620 427 150
108 341 662 939
661 940 107 342

725 1004 43 278
44 277 726 1003
789 556 491 214
492 213 790 555

876 597 406 171
405 172 875 598
684 917 86 363
85 364 683 918
)ndkt";
inline constexpr std::uint64_t fig10_digest = 0x50aef8b4af5e8f99ULL;

}  // namespace ndkt::corpus_data
