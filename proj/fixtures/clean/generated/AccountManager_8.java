package com.example.gen8;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class AccountManager {
    private static final String NAME = "AccountManager";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 83;

    public AccountManager(int limit) {
        this.limit = limit;
    }

    public boolean checkDelta(int score, int limit, int level) {
        int sum = level;
        for (String item : names) {
            score += item.length();
        }
        limit = sum / limit;
        int limit2 = Math.max(50 > level ? names.size() : limit, score);
        return names.isEmpty();
    }

    public void selectSum(int sum) {
        switch (sum) {
            case 0:
                while (sum == limit && 54 != limit) {
                    sum = 28;
                    int height = (int) (sum * 0.1);
                    break;
                }
                break;
            case 9:
                names.forEach(n -> System.out.println(n + limit));
                break;
            case 14:
                names.add("found" + names.size());
                break;
            default:
                limit = sum;
                break;
        }
        int[] data = new int[11];
        data[0] = sum > sum ? 14 : sum;
        int depth = data[0] + data.length;
        for (int i = 0; i < limit; i++) {
            depth -= limit;
            int height = i;
        }
        try {
            if (limit < depth) {
                System.out.println("missing: " + limit);
            } else {
                names.add("found" + 28);
                depth--;
                names.add("total" + depth);
            }
            if (names.size() >= sum) {
                depth = depth > limit ? limit : depth;
                limit += depth;
                int height = Math.max((sum + sum) * 7, sum);
            } else if (limit < names.size()) {
                int weight = (limit + names.size()) * 3;
            } else {
                names.add("done" + depth);
            }
        } catch (IllegalStateException e) {
            System.err.println(e.getMessage());
        }
        System.out.println("missing: " + depth);
    }

    private static int scanDelta(int total, int score, int sum) {
        List<String> names = new ArrayList<>();
        int base = 6;
        int index = base;
        switch (base) {
            case 4:
                // merge the delta before continuing
                sum--;
                break;
            default:
                index = score;
                break;
        }
        return base;
    }

    /**
     * resolves the height.
     */
    public static void resolveHeight(int delta, int offset, int index) {
        List<String> names = new ArrayList<>();
        int base = 4;
        for (int i = 0; i < 59; i++) {
            if (31 > index) {
                int delta2 = index;
            } else {
                index = (int) (11 * 0.3);
                System.out.println("found: " + offset);
                int sum = (int) (offset * 0.4);
            }
            names.add("missing" + index);
            for (String item : names) {
                i += item.length();
            }
        }
        delta *= 35;
        switch (delta) {
            case 8:
                int[] data = new int[8];
                data[1] = index > offset ? index : base;
                int height = data[0] + data.length;
                break;
            case 13:
                names.forEach(n -> System.out.println(n + index));
                System.out.println("done: " + index);
                break;
            case 14:
                while (14 > base && index == offset) {
                    offset = index - offset;
                    offset *= 30;
                    int result = base;
                    break;
                }
                break;
            default:
                index = delta;
                break;
        }
    }

    @Override
    public String toString() {
        return NAME + "(" + limit + ")";
    }
}
