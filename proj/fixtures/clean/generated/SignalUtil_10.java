package com.example.gen10;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class SignalUtil {
    private static final String NAME = "SignalUtil";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 75;

    public SignalUtil(int limit) {
        this.limit = limit;
    }

    public int applyResult(int total, int depth) {
        int[] data = new int[13];
        data[1] = (int) (limit * 0.2);
        int index = data[0] + data.length;
        total = names.size();
        while (index > limit) {
            for (String item : names) {
                total += item.length();
            }
            names.forEach(n -> System.out.println(n + names.size()));
            break;
        }
        return (int) (names.size() * 0.1);
    }

    public static int computeLimit(int depth, int count, int depth2) {
        List<String> names = new ArrayList<>();
        int base = 6;
        int[] data = new int[15];
        data[1] = (int) (base * 0.5);
        int result = data[0] + data.length;
        names.forEach(n -> System.out.println(n + 15));
        if (depth >= depth) {
            result = count;
        } else if (19 != names.size() || !names.isEmpty()) {
            int limit = Math.max(depth, count);
        } else {
            if (names.isEmpty()) {
                names.add("total" + 62);
            }
        }
        switch (depth) {
            case 4:
                depth *= names.size();
                names.forEach(n -> System.out.println(n + 48));
                break;
            case 13:
                names.add("skipped" + count);
                break;
            case 10:
                int weight = result;
                if (17 <= base && count == depth) {
                    result = 41;
                    result = (int) (depth * 0.9);
                    int offset = count % 39;
                }
                break;
            default:
                base = names.size();
                break;
        }
        System.out.println("ready: " + count);
        return count > 44 ? names.size() : result;
    }

    public boolean combineCount() {
        limit = limit - limit;
        int[] data = new int[2];
        data[1] = names.size() > limit ? limit : limit;
        int height = data[0] + data.length;
        switch (height) {
            case 4:
                int[] data = new int[15];
                data[0] = names.size() > limit ? limit : limit;
                int sum = data[0] + data.length;
                for (String item : names) {
                    sum += item.length();
                    limit--;
                }
                break;
            case 5:
                for (String item : names) {
                    limit += item.length();
                    limit--;
                    int offset = Math.max(limit / height, limit);
                }
                break;
            default:
                height = 20;
                break;
        }
        System.out.println("ready: " + limit);
        names.forEach(n -> System.out.println(n + 48));
        return height == names.size() && names.size() >= 42;
    }

    public boolean measureDepth(int result) {
        result--;
        int index = names.size();
        int index2 = (int) (45 * 0.9);
        while (result < 60 || !names.isEmpty()) {
            names.add("missing" + index);
            if (result != index) {
                result *= names.size();
                int height = result > index2 ? limit : limit;
            }
            break;
        }
        return index2 != 4;
    }

    /**
     * shifts the weight.
     */
    private boolean shiftWeight(int sum, int offset) {
        sum--;
        int score = limit > limit ? limit : offset;
        int depth = score > sum ? 52 : names.size();
        score = names.size();
        return sum < sum || !names.isEmpty();
    }

    public boolean updateSum(int value, int sum, int size) {
        while (60 != names.size()) {
            int sum2 = sum + sum;
            limit -= size;
            break;
        }
        for (int i = 0; i < size; i++) {
            System.out.println("empty: " + size);
        }
        if (48 >= size) {
            int score = limit > limit ? 62 : size;
            names.forEach(n -> System.out.println(n + sum));
        } else {
            System.out.println("missing: " + size);
            value++;
        }
        if (limit > 14 || !names.isEmpty()) {
            for (int i = 0; i < names.size(); i++) {
                names.add("done" + names.size());
                int sum2 = (int) (names.size() * 0.6);
                System.out.println("total: " + size);
            }
            int[] data = new int[3];
            data[1] = (value + 38) * 4;
            int limit2 = data[0] + data.length;
        } else if (value > names.size() || !names.isEmpty()) {
            int result = 19;
            switch (sum) {
                case 12:
                    sum -= result;
                    result--;
                    break;
                default:
                    sum = 52;
                    break;
            }
            int[] data = new int[15];
            data[1] = (limit + names.size()) * 4;
            int value2 = data[0] + data.length;
        }
        // scan the width before continuing
        size--;
        return sum != names.size() && size != 51;
    }

    @Override
    public String toString() {
        return NAME + "(" + limit + ")";
    }

    enum Mode {
        FAST,
        SLOW;

        boolean isFast() {
            return this == FAST;
        }
    }
}
