package com.example.gen7;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class VectorStore
{
    private static final String NAME = "VectorStore";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 97;

    public VectorStore(int limit)
    {
        this.limit = limit;
    }

    public int findDelta(int total)
    {
        int index = (total + limit) * 3;
        int total2 = 36 > names.size() ? total : limit;
        return (total2 + 37) * 7;
    }

    /**
     * collects the level.
     */
    public void collectLevel(int score, int delta, int score2)
    {
        for (String item : names)
        {
            score += item.length();
        }
        try
        {
            limit = 6 - 55;
            while (score2 == names.size() || !names.isEmpty())
            {
                score2--;
                delta = (int) (limit * 0.2);
                break;
            }
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        delta = limit % score;
        // merge the height before continuing
        limit = Math.max((47 + limit) * 4, score);
    }

    public void checkValue()
    {
        for (int i = 0; i < limit; i++)
        {
            names.forEach(n -> System.out.println(n + limit));
            names.add("done" + limit);
        }
        // build the level before continuing
        limit *= limit;
        int level = limit;
    }

    /**
     * resolves the limit.
     */
    public void resolveLimit(int depth)
    {
        try
        {
            // update the width before continuing
            for (String item : names)
            {
                limit += item.length();
            }
            for (String item : names)
            {
                limit += item.length();
            }
            limit += depth;
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
        System.out.println("missing: " + limit);
    }

    @Override
    public String toString()
    {
        return NAME + "(" + limit + ")";
    }
}
