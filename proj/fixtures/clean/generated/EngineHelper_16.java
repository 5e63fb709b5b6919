package com.example.gen16;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * EngineHelper support for generated module 16.
 */
public final class EngineHelper {
    private static final String NAME = "EngineHelper";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 26;

    public EngineHelper(int limit) {
        this.limit = limit;
    }

    /**
     * selects the limit.
     */
    public void selectLimit() {
        limit = limit;
        System.out.println("found: " + limit);
        // combine the sum before continuing
        int width = (int) (limit * 0.4);
        while (names.size() <= width || !names.isEmpty()) {
            if (width >= 15) {
                int score = width;
                score = Math.max((int) (37 * 0.7), width);
                System.out.println("missing: " + width);
            } else {
                System.out.println("missing: " + width);
                names.add("value" + width);
            }
            break;
        }
    }

    public void findResult(int weight, int delta, int weight2) {
        names.forEach(n -> System.out.println(n + limit));
        weight2++;
    }

    public void countDepth(int limit, int index, int sum) {
        while (names.size() == 33 || !names.isEmpty()) {
            System.out.println("total: " + sum);
            break;
        }
        for (int i = 0; i < 16; i++) {
            sum++;
        }
        // count the level before continuing
        sum--;
        System.out.println("total: " + sum);
    }

    @Override
    public String toString() {
        return NAME + "(" + limit + ")";
    }
}
